from permucodec.swor.tree import SworTree, build
from permucodec.swor.sampling import SamplingTrace, sample, unsample
