"""Simon's congruence on words: factorizations, decision procedures and class counts."""
from .binary import (
    classify_binary_aba,
    equiv_binary,
    is_singleton,
    maxsimk_binary,
    normal_form_binary,
    singleton_witness,
    unary_equiv,
)
from .counting import (
    classes_with_m_arches_matrix,
    classes_with_m_arches_rec,
    lucas_u,
    perfect_universal_counts,
    simon_index_binary,
)
from .factorization import (
    AlphaBetaFactorization,
    ArchFactorization,
    FactorizationError,
    alpha_beta,
    arch_factorization,
    core,
    reverse_arch_factorization,
)
from .spectra import (
    INFINITE,
    Spectrum,
    can_drop_letter,
    can_drop_suffix,
    is_scattered_factor,
    maxsimk_oracle,
    simk_oracle,
    spectrum_upto,
    universality_index,
)
from .ternary import (
    classify_ternary_beta,
    core_level,
    equiv_ternary,
    modus_letter_set,
    w_blocks_factorization,
)
from .words import (
    Alphabet,
    DomainError,
    ParseError,
    Word,
    count_letter,
    enumerate_words,
    letters,
    parse_word,
    project,
    reverse,
)

__version__ = "0.1.0"
