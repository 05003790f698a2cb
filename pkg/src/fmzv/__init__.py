"""Word algebra and mod-p numerics for finite multiple zeta value identities."""

from .indices import (
    Index,
    add_componentwise,
    binary_vectors,
    constrained_compositions,
    depth,
    format_index,
    hoffman_dual,
    parse_index,
    weak_compositions,
    weight,
)
from .words import (
    NCPolynomial,
    concat,
    harmonic,
    hoffman_dual_word,
    index_of_word,
    reverse_word,
    shuffle,
    tau,
    word_of_index,
)
from .series import (
    USeries,
    const_series,
    geometric_yu,
    series_concat,
    series_harmonic,
    series_shuffle,
    substitution_series,
)
from .generators import bumped_insertion_words, insertion_words, ones_expansion_sides
from .modp import (
    AdeleSlice,
    adele_zeta,
    bernoulli_mod_p,
    inv_mod,
    is_prime,
    pow_mod,
    primes_in,
    zeta_mod_p,
    zeta_mod_p_naive,
    zeta_poly_mod_p,
)
from .verify import (
    CheckReport,
    PrimeCheck,
    check_eq3,
    check_height_one,
    check_homogeneous_zero,
    check_ikz,
    check_key_lemma,
    check_lemma2,
    check_ohno,
    check_shuffle_duality,
    check_stuffle_hom,
    check_sum_formula,
    lemma_index_layers,
    lemma_word_layers,
)
from .suite import run_battery

__version__ = "0.1.0"

__all__ = [
    "AdeleSlice",
    "CheckReport",
    "Index",
    "NCPolynomial",
    "PrimeCheck",
    "USeries",
    "add_componentwise",
    "adele_zeta",
    "bernoulli_mod_p",
    "binary_vectors",
    "bumped_insertion_words",
    "check_eq3",
    "check_height_one",
    "check_homogeneous_zero",
    "check_ikz",
    "check_key_lemma",
    "check_lemma2",
    "check_ohno",
    "check_shuffle_duality",
    "check_stuffle_hom",
    "check_sum_formula",
    "concat",
    "const_series",
    "constrained_compositions",
    "depth",
    "format_index",
    "geometric_yu",
    "harmonic",
    "hoffman_dual",
    "hoffman_dual_word",
    "index_of_word",
    "insertion_words",
    "inv_mod",
    "is_prime",
    "lemma_index_layers",
    "lemma_word_layers",
    "ones_expansion_sides",
    "parse_index",
    "pow_mod",
    "primes_in",
    "reverse_word",
    "run_battery",
    "series_concat",
    "series_harmonic",
    "series_shuffle",
    "shuffle",
    "substitution_series",
    "tau",
    "weak_compositions",
    "weight",
    "word_of_index",
    "zeta_mod_p",
    "zeta_mod_p_naive",
    "zeta_poly_mod_p",
]
