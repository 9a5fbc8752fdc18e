"""Parry sequences and minimal string attractors of their prefixes."""
from .attractors import (
    AttractorSet,
    TheoremId,
    attractor_affine,
    attractor_binary,
    attractor_general,
    attractor_nonsimple,
    attractor_prior,
    attractor_restricted,
    classify_category,
    conditions,
    gamma,
)
from .core import ParryParameters, PrefixEngine, k_index, morphism_image, validate
from .errors import CapExceeded, ConsistencyError, InvalidParameters, ParryError, PreconditionError
from .verifier import Verdict, is_attractor, minimal_attractor, power_transfer_check
from .words import format_word, is_power_of, parse_word

__version__ = "0.1.0"
