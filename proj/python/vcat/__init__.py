from ._vcat import (
    BaseMismatchError,
    BudgetExceededError,
    InvalidModuleError,
    ParseError,
    Space,
    bool_encode,
    bridge_check,
    complete,
    example_antichain2,
    example_t3,
    example_z2,
    filter_distance,
    filter_flatness,
    flatness_oracle,
    format_space,
    hausdorff,
    is_complete,
    is_flat,
    load_space,
    parse_space,
    spaces_isomorphic,
    validate_space,
    zero_quotient,
)

__all__ = [
    "BaseMismatchError",
    "BudgetExceededError",
    "InvalidModuleError",
    "ParseError",
    "Space",
    "bool_encode",
    "bridge_check",
    "complete",
    "example_antichain2",
    "example_t3",
    "example_z2",
    "filter_distance",
    "filter_flatness",
    "flatness_oracle",
    "format_space",
    "hausdorff",
    "is_complete",
    "is_flat",
    "load_space",
    "parse_space",
    "spaces_isomorphic",
    "validate_space",
    "zero_quotient",
]
