"""Birack colorings, birack brackets and bracket quivers for framed links."""

from .rings import Gaussian, LaurentGaussian, Zn, parse_ring_spec
from .birack import (
    FiniteBirack,
    alexander_birack,
    birack_rank,
    check_homomorphism,
    enumerate_endomorphisms,
    kink_map,
    validate_birack,
)
from .diagram import (
    FramedDiagram,
    add_kinks,
    from_braid,
    parse_gauss_code,
    parse_pd_code,
    reidemeister_perturb,
    state_loop_count,
    writhe,
)
from .homset import counting_invariant, enumerate_colorings
from .bracket import (
    BirackBracket,
    bracket_multiset,
    format_invariant_poly,
    state_sum,
    validate_bracket,
)
from .quiver import (
    build_quiver,
    export_dot,
    in_degree_polynomial,
    maximal_path_polynomial,
    two_variable_polynomial,
)
from .search import SearchConfig, search_brackets

__version__ = "0.1.0"
