"""Graded sl2 defects, negative-defect verifiers and descendants of symmetric pairs."""

__version__ = "0.1.0"

from .reps import (  # noqa: E402
    GradedIrrep,
    GradedRep,
    Sign,
    UngradedRep,
    bar_sum_graded,
    bar_tensor_graded,
    closed_form_tensor_defect,
    closed_form_wedge2_defect,
    defect,
    dual,
    irrep,
    irrep_defect,
    tensor,
    wedge2,
)

__all__ = [
    "__version__",
    "Sign",
    "GradedIrrep",
    "GradedRep",
    "UngradedRep",
    "irrep",
    "dual",
    "tensor",
    "wedge2",
    "defect",
    "irrep_defect",
    "bar_sum_graded",
    "bar_tensor_graded",
    "closed_form_tensor_defect",
    "closed_form_wedge2_defect",
]
