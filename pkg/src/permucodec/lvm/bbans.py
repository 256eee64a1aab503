"""
Bits-back ANS for small discrete latent variable models.

       latent        observed
      variable         data

        ( z ) ------> ( x )

The model has a prior P(z), a likelihood P(x | z) and an approximate posterior
Q(z | x), all quantized. Each observation is coded by decoding a latent from
Q(. | x), encoding x under P(. | z) and encoding z under P(z). Over many
symbols the per-symbol growth of the state approaches the negative evidence
lower bound (NELBO).
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from permucodec.ans.core import AnsState, QuantizedDist, ans_decode, ans_encode
from permucodec.errors import InputParseError, InvalidInputError, StateDepletedError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DiscreteLvm:
    """
    Quantized latent variable model over Z = {0..K-1} and X = {0..X-1}.

    Attributes:
        prior: P(z), precision N_Z
        conditional: conditional[z] is P(x | z), all with precision N_X
        posterior: posterior[x] is Q(z | x), all with precision N_Z
    """
    prior: QuantizedDist
    conditional: Tuple[QuantizedDist, ...]
    posterior: Tuple[QuantizedDist, ...]

    def __post_init__(self):
        object.__setattr__(self, 'conditional', tuple(self.conditional))
        object.__setattr__(self, 'posterior', tuple(self.posterior))
        latents = tuple(range(len(self.prior)))
        if self.prior.symbols != latents:
            raise InvalidInputError("prior must cover latents 0..K-1")
        if len(self.conditional) != len(latents):
            raise InvalidInputError(
                f"{len(latents)} latents but {len(self.conditional)} conditional rows")
        observations = tuple(range(len(self.posterior)))
        for z, row in enumerate(self.conditional):
            if row.symbols != observations:
                raise InvalidInputError(f"conditional row {z} must cover observations 0..X-1")
            if row.precision != self.conditional[0].precision:
                raise InvalidInputError("all conditional rows must share precision N_X")
        for x, row in enumerate(self.posterior):
            if row.symbols != latents:
                raise InvalidInputError(f"posterior row {x} must cover latents 0..K-1")
            if row.precision != self.prior.precision:
                raise InvalidInputError("posterior rows must have the prior's precision N_Z")

    @classmethod
    def from_weights(cls, prior: Sequence[int], conditional: Sequence[Sequence[int]],
                     posterior: Sequence[Sequence[int]]) -> 'DiscreteLvm':
        def row(weights):
            return QuantizedDist(tuple(range(len(weights))), tuple(weights))
        return cls(row(prior), tuple(row(w) for w in conditional), tuple(row(w) for w in posterior))

    @classmethod
    def with_exact_posterior(cls, prior: QuantizedDist,
                             conditional: Sequence[QuantizedDist]) -> 'DiscreteLvm':
        """Model whose posterior is the joint's own posterior, quantized to N_Z."""
        joint = cls._joint(prior, conditional)
        posterior = tuple(
            QuantizedDist.quantize(joint[:, x] / joint[:, x].sum(), prior.precision)
            for x in range(joint.shape[1])
        )
        return cls(prior, tuple(conditional), posterior)

    @staticmethod
    def _joint(prior: QuantizedDist, conditional: Sequence[QuantizedDist]) -> np.ndarray:
        p_z = np.asarray(prior.weights, dtype=np.float64) / prior.precision
        p_x_given_z = np.array([np.asarray(r.weights, dtype=np.float64) / r.precision
                                for r in conditional])
        return p_z[:, None] * p_x_given_z

    @property
    def latent_precision(self) -> int:
        return self.prior.precision

    @property
    def num_latents(self) -> int:
        return len(self.prior)

    @property
    def num_observations(self) -> int:
        return len(self.posterior)

    def as_arrays(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(P(z), P(x|z) as K x X, Q(z|x) as X x K) in floating point."""
        prior = np.asarray(self.prior.weights, dtype=np.float64) / self.prior.precision
        cond = np.array([np.asarray(r.weights, dtype=np.float64) / r.precision
                         for r in self.conditional])
        post = np.array([np.asarray(r.weights, dtype=np.float64) / r.precision
                         for r in self.posterior])
        return prior, cond, post

    def weight_rows(self) -> Tuple[List[int], List[List[int]], List[List[int]]]:
        return (list(self.prior.weights),
                [list(r.weights) for r in self.conditional],
                [list(r.weights) for r in self.posterior])

    def dump(self, path: Union[str, Path]) -> None:
        """
        Write the model as plain text:

            latents K
            observations X
            prior w_0 .. w_{K-1}
            conditional w_0 .. w_{X-1}     (K lines, one per z)
            posterior w_0 .. w_{K-1}       (X lines, one per x)
        """
        prior, conditional, posterior = self.weight_rows()
        lines = [f"latents {self.num_latents}", f"observations {self.num_observations}",
                 "prior " + " ".join(map(str, prior))]
        lines += ["conditional " + " ".join(map(str, row)) for row in conditional]
        lines += ["posterior " + " ".join(map(str, row)) for row in posterior]
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: Union[str, Path]) -> 'DiscreteLvm':
        """Read a model written by dump(); '#' starts a comment."""
        header, rows = {}, {'prior': [], 'conditional': [], 'posterior': []}
        text = Path(path).read_text(encoding="utf-8")
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            key, *values = line.split()
            try:
                numbers = [int(v) for v in values]
            except ValueError:
                raise InputParseError(f"non-integer value in {key!r} line", lineno) from None
            if key in ('latents', 'observations'):
                if len(numbers) != 1:
                    raise InputParseError(f"{key!r} takes one integer", lineno)
                header[key] = numbers[0]
            elif key in rows:
                rows[key].append(numbers)
            else:
                raise InputParseError(f"unknown key {key!r}", lineno)
        if len(rows['prior']) != 1:
            raise InputParseError("model needs exactly one prior line")
        if 'latents' in header and len(rows['prior'][0]) != header['latents']:
            raise InputParseError("prior length does not match 'latents'")
        if 'observations' in header and len(rows['posterior']) != header['observations']:
            raise InputParseError("posterior rows do not match 'observations'")
        try:
            return cls.from_weights(rows['prior'][0], rows['conditional'], rows['posterior'])
        except InvalidInputError as exc:
            raise InputParseError(str(exc)) from exc


def bbans_encode(xs: Sequence[int], lvm: DiscreteLvm, s: AnsState,
                 latent_trace: Optional[List[int]] = None) -> AnsState:
    """
    Encode observations with bits-back coding.

    Raises:
        StateDepletedError: if the state is below N_Z before a posterior decode
    """
    n_z = lvm.latent_precision
    for x in xs:
        if s < n_z:
            raise StateDepletedError(s, n_z)
        if not 0 <= x < lvm.num_observations:
            raise InvalidInputError(f"observation {x} outside [0, {lvm.num_observations})")
        s, z = ans_decode(s, lvm.posterior[x])
        likelihood = lvm.conditional[z]
        s = ans_encode(s, likelihood.range_of(x), likelihood.precision)
        s = ans_encode(s, lvm.prior.range_of(z), n_z)
        if latent_trace is not None:
            latent_trace.append(z)
    logger.debug("BB-ANS encoded %d symbols -> %d bits", len(xs), s.bit_length())
    return s


def bbans_decode(s: AnsState, count: int, lvm: DiscreteLvm,
                 latent_trace: Optional[List[int]] = None) -> Tuple[List[int], AnsState]:
    """Decode count observations, restoring the state bbans_encode started from."""
    xs = []
    for _ in range(count):
        s, z = ans_decode(s, lvm.prior)
        s, x = ans_decode(s, lvm.conditional[z])
        posterior = lvm.posterior[x]
        s = ans_encode(s, posterior.range_of(z), posterior.precision)
        xs.append(x)
        if latent_trace is not None:
            latent_trace.append(z)
    xs.reverse()
    if latent_trace is not None:
        latent_trace.reverse()
    return xs, s


def nelbo(lvm: DiscreteLvm, data_dist: QuantizedDist) -> float:
    """
    E_x E_{z ~ Q(.|x)} [-log2 (P(x|z) P(z) / Q(z|x))] in bits per symbol.

    Args:
        lvm: The model
        data_dist: Distribution of observations the expectation is taken under
    """
    prior, cond, post = lvm.as_arrays()
    # per (x, z): log2 Q(z|x) - log2 P(x|z) - log2 P(z)
    per_pair = np.log2(post) - np.log2(cond.T) - np.log2(prior)[None, :]
    per_x = np.sum(post * per_pair, axis=1)
    total = 0.0
    for x, weight in zip(data_dist.symbols, data_dist.weights):
        if not 0 <= x < lvm.num_observations:
            raise InvalidInputError(f"observation {x} outside [0, {lvm.num_observations})")
        total += weight / data_dist.precision * per_x[x]
    return float(total)


def marginal_cross_entropy(lvm: DiscreteLvm, data_dist: QuantizedDist) -> float:
    """E_x [-log2 P(x)] under the model's marginal; nelbo() is never below it."""
    prior, cond, _ = lvm.as_arrays()
    marginal = prior @ cond
    return float(sum(w / data_dist.precision * -np.log2(marginal[x])
                     for x, w in zip(data_dist.symbols, data_dist.weights)))
