"""Finite permutation-group toolkit for almost Engel groups: the subgroups
E_n(g) and E(g), nilpotent residuals, Fitting series, and a verification
harness over a corpus of small groups."""

__version__ = "0.1.0"

from .perm import (CapExceeded, DegreeMismatch, GroupHandle, Permutation, commutator, compose,
                   conjugate, enumerate_elements, identity, inverse, left_normed)
from .subgroups import (QuotientGroup, Subgroup, center, centralizer, commutator_subgroup,
                        frattini_p, image_in_quotient, intersect, is_normal, join, normal_closure,
                        preimage, quotient, subgroup)
from .structure import (SeriesRecord, coprime_order_pairs, derived_series, element_order, exponent,
                        fitting, fitting_height, fitting_series, hall_qprime, is_nilpotent,
                        is_solvable, lower_central_series, nilpotency_class, nilpotent_residual,
                        p_core, sylow)
from .engel import (E_n, E_stable, EngelProfile, EngelRecord, chain_orders, engel_chain,
                    engel_profile, is_engel_element)
from .corpus import builtin, default_corpus, from_label, load, parse_group_file, render, resolve
