"""Brute-force modular representation theory of SL2(F_q) over an explicitly
constructed F_q, used as an independent check of the character formulas."""

from .gf import GF, field, rank, nullspace, matmul
from .group import sl2_enumerate, conjugacy_class_audit, ClassAudit
from .modules import (
    BrauerLift,
    brauer_char_oracle,
    delta_action,
    hom_dim_oracle,
    lk_action,
    lk_action_tensor,
    lk_basis,
)

__all__ = [
    "GF",
    "field",
    "rank",
    "nullspace",
    "matmul",
    "sl2_enumerate",
    "conjugacy_class_audit",
    "ClassAudit",
    "BrauerLift",
    "brauer_char_oracle",
    "delta_action",
    "hom_dim_oracle",
    "lk_action",
    "lk_action_tensor",
    "lk_basis",
]
