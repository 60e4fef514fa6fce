"""Perfectly clustering Lyndon words over {a, b, c} and the palindromes in their
special factorizations."""

from .bwt import ClusteringReport, bwt, clustering_report, is_perfectly_clustering
from .factorization import (
    LEMMA1_SETS,
    PalindromePairSplit,
    SpecialFactorization,
    UniquenessViolation,
    general_palindromic_factorization,
    is_pcl,
    is_pcl_via_bwt,
    lemma1_compatible,
    p1_obstruction,
    palindromic_special_factorization,
    product_of_two_palindromes,
    special_factorizations,
)
from .morphisms import (
    AUTOMORPHISMS,
    LAMBDA_A,
    LAMBDA_B,
    RHO_B,
    RHO_C,
    Automorphism,
    FreeGroupWord,
    apply_automorphism,
    decompose,
    free_reduce,
    inverse_automorphism,
    omega,
    theta,
    witness_from_directive,
)
from .palindromes import (
    directive_of,
    is_christoffel,
    is_separating,
    longest_palindromic_suffix,
    pal,
    palindromic_closure,
)
from .verification import (
    CLAIMS,
    MembershipVerdict,
    PalindromeSetSlice,
    PclCatalog,
    Side,
    Status,
    VerificationReport,
    compute_sets,
    enumerate_pcl,
    language_membership,
    membership,
    verify_claim,
)
from .words import (
    ABC,
    AlphabetError,
    OrderedAlphabet,
    alph,
    conjugates,
    factors_k,
    is_lyndon,
    is_palindrome,
    is_primitive,
    lyndon_conjugate,
    lyndon_words,
    parikh,
    reverse,
)

__version__ = "0.1.0"
