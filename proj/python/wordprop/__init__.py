"""Word maps on finite groups: exact satisfaction probabilities, the
w_{m,n}-property and the bounds that relate them."""

from ._core import (
    FileFormatError,
    Group,
    GroupError,
    InfeasibleEnumeration,
    PropertyResult,
    Word,
    WordError,
    WordGraph,
    builtin,
    cyclic_group,
    default_catalog,
    derivation_chain_holds,
    direct_product,
    evaluate,
    has_wmn_property,
    is_identity_in,
    kst_bound_holds,
    load_group,
    main_bound,
    main_bound_holds,
    naive_oracle,
    named_word,
    parse_word,
    probability,
    property_frontier,
    save_group,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
