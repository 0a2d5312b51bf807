"""Exact analysis of finite set systems: VC dimension, maximum and maximal
families, forbidden labels, ladders, normal forms and compression schemes."""

from .core import (Domain, PartialType, SetSystem, Trace, delta_shift, dual, restrict)
from .errors import (CapExceededError, DomainMismatchError, GeneralPositionError,
                     NotCompressibleError, NotMaximumError, ParseError, PreconditionError,
                     VCSetsError)
from .vc import (ForbiddenLabel, all_forbidden_labels, forbidden_label, helly_consistency,
                 is_maximal, is_maximum, maximal_completion, membership_by_forbidden_labels,
                 sauer_phi, shatters, vc_dimension)
from .stability import (LadderWitness, NormalForm, is_stable_family, ladder_index,
                        stable_normal_form)
from .compression import (CompressionRecord, Rectangle, compress_type,
                          find_internally_shattered, internally_shatters, rectangle_compress,
                          rectangle_reconstruct, reconstruct_type,
                          verify_extended_compression)

__version__ = "0.1.0"
