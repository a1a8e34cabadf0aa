"""Module defining various utilities."""
from mqkd.utils.misc import check_path, product_dict, session_streams
from mqkd.utils.report_manager import ReportMgr, build_report_manager
from mqkd.utils.statistics import SessionStatistics

__all__ = [
    "check_path",
    "product_dict",
    "session_streams",
    "ReportMgr",
    "build_report_manager",
    "SessionStatistics",
]
