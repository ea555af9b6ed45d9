# models/__init__.py - domain types

from .graph import Graph, DegeneracyOrdering
from .coloring import ListAssignment, Coloring
from .report import PcfReport, ListCheck
from .reduction import (
    ReductionKind,
    CaseTag,
    V0Config,
    Reduction,
    CaseScratch,
    TraceStep,
    SolveTrace,
)
from .search import SearchBudget, SearchStatus, SearchResult, RefuteStatus, RefuteResult
from .instance import Expected, Instance

__all__ = [
    'Graph',
    'DegeneracyOrdering',
    'ListAssignment',
    'Coloring',
    'PcfReport',
    'ListCheck',
    'ReductionKind',
    'CaseTag',
    'V0Config',
    'Reduction',
    'CaseScratch',
    'TraceStep',
    'SolveTrace',
    'SearchBudget',
    'SearchStatus',
    'SearchResult',
    'RefuteStatus',
    'RefuteResult',
    'Expected',
    'Instance',
]
