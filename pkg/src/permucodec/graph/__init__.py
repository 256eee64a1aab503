from permucodec.graph.polya import (
    DEFAULT_BETA,
    PolyaContext,
    polya_conditionals,
    polya_decode_vertex,
    polya_encode_vertex,
    polya_joint_log2,
)
from permucodec.graph.rec import (
    GraphEdgeList,
    RecTrace,
    edge_sort,
    er_graph_nll,
    graph_nll,
    order_savings,
    polya_sequence_nll,
    rec_decode,
    rec_encode,
)
from permucodec.graph.generators import preferential_attachment_graph, uniform_multigraph
