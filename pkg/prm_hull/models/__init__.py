from prm_hull.models.reports import (
    ACountReport,
    CaseTag,
    DeltaReport,
    DimReport,
    HullReport,
    SweepResult,
)

__all__ = ["ACountReport", "CaseTag", "DeltaReport", "DimReport", "HullReport", "SweepResult"]
