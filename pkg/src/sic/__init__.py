from .operator import SicReport, projector_sum, sic_report, sic_expectation

__all__ = ["SicReport", "projector_sum", "sic_report", "sic_expectation"]
