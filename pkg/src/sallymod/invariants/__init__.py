"""Invariants of an m-primary ideal and a minimal reduction, on either engine."""

from .closure import NaritaAudit, RatliffRushResult, narita_rescale_check, ratliff_rush
from .form import (FormTable, HypothesisError, Lemma37Result, VDimensionAudit, lemma37_witness,
                   multilinear_form, ring_type, socle_length_check, v_dimension, v_dimension_audit)
from .hilbert import (HilbertData, HilbertFitError, binomial, fit_binomial, fit_hilbert,
                      hilbert_samuel, poly_value)
from .pair import (BudgetExceeded, PairData, default_power_budget, ReductionError, colength, intersection_length, is_reduction,
                   pair_data, reduction_number)
from .sally import (AnalysisConfig, Check, DepthClass, SallyReport, TheoremFlag,
                    cm_and_theorem_flags, DepthScan, depth_class, depth_routes, depth_scan, hp_numerator, sally_data,
                    series_from_numerator, vv_check)
from .sampling import IndependenceReport, ReductionSample, sample_reductions

__all__ = [name for name in dir() if not name.startswith("_")]
