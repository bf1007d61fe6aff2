"""Conjugacy classes of the symmetric group and the configuration graphs of
``phi -> phi sigma phi^-1``."""

from .canon import canonical_code, functional_code, is_isomorphic, iso_classes
from .configurations import (
    Component,
    ConfigurationGraph,
    FlockMismatchError,
    NodeClass,
    OrbitTrace,
    ResourceGuardError,
    atlas,
    build_configuration,
    check_theorem2,
    classify,
    forward_orbit,
    oracle_components,
    preimages_in_flock,
    step,
    telomere_set,
)
from .conjugacy import (
    ConjugatorFamily,
    NotConjugateError,
    all_conjugators,
    are_conjugate,
    brute_force_conjugators,
    canonical_conjugator,
    count_conjugators,
)
from .flocks import Flock, enumerate_flock, flock_of, membership, stem_permutation
from .perm import (
    CycleType,
    ParseError,
    Partition,
    Permutation,
    compose,
    conjugate,
    cyclic_type,
    decompose,
    format_perm,
    identity,
    inverse,
    parse,
    partitions_of,
    rank,
    type_of,
    unrank,
)

__version__ = "0.1.0"
