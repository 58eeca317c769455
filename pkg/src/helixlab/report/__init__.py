"""Report schema and rendering."""

from helixlab.report.models import ANCHORS, CheckRecord, Report, ReportSummary, RunConfig, TGrid
from helixlab.report.render import render_table

__all__ = ["ANCHORS", "CheckRecord", "Report", "ReportSummary", "RunConfig", "TGrid", "render_table"]
