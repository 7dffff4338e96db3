"""Generating-function coefficients for Alcuin's sequence."""

from alcuin.series.coefficients import (
    CoefficientTable,
    alcuin_coefficients,
    product_check,
    representation_count,
    representation_table,
)
from alcuin.series.power import TruncatedSeries, geometric_series, series_multiply

__all__ = [
    "CoefficientTable",
    "TruncatedSeries",
    "alcuin_coefficients",
    "geometric_series",
    "product_check",
    "representation_count",
    "representation_table",
    "series_multiply",
]
