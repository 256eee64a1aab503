from permucodec.lvm.bbans import (
    DiscreteLvm,
    bbans_decode,
    bbans_encode,
    marginal_cross_entropy,
    nelbo,
)
