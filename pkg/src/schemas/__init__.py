"""Schemas package for data models."""

from .graph import CouplingGraph, LatticeSpec, MinPathSummary
from .series import CorrelationSeries, LeadingTerm, SeriesEvaluation
from .analytic import FrontSnapshot, SiteValue, ThresholdCrossing, VelocityPoint, VelocityProfile
from .run import GraphSource, ResultTable, RunConfig

__all__ = [
    "CouplingGraph",
    "LatticeSpec",
    "MinPathSummary",
    "CorrelationSeries",
    "LeadingTerm",
    "SeriesEvaluation",
    "FrontSnapshot",
    "SiteValue",
    "ThresholdCrossing",
    "VelocityPoint",
    "VelocityProfile",
    "GraphSource",
    "ResultTable",
    "RunConfig",
]
