"""Exact workbench for extended affine Weyl groups, Iwahori-Matsumoto
Hecke algebras, their spherical and antispherical modules, the
decategorified K-theory action, and Springer-correspondence
combinatorics.  Everything is integer/Laurent-exact; there is no
floating point anywhere."""

from .laurent import LaurentPoly, GroupAlgebraElt, ga_exact_divide, V, V_INV
from .rootdata import (RootDatum, FiniteWeylElt, load_datum, PRESET_NAMES,
                       reflect, enumerate_weyl, weyl_character, dominance_leq)
from .affine import (AffineElt, identity, translation, length,
                     length_by_hyperplanes, is_length_zero, omega_decompose,
                     omega_elements, reduced_word, bruhat_leq,
                     simple_affine_reflections)
from .hecke import (HeckeElt, BernsteinElt, delta, h_mul, h_inv_std, theta,
                    to_bernstein, z_center, is_central, h_bar, kl_b,
                    b_generator)
from .antispherical import (ModuleElt, ReflectionDatum, hecke_side,
                            ktheory_side, divided_sum, dl_action_bs,
                            induced_action, ktheory_action_qs,
                            intertwiner_check)
from . import springer

__version__ = "0.1.0"
