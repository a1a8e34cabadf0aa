""" Report manager utility """
import time

import pandas as pd

from mqkd.utils.logging import logger, structured_logging


def build_report_manager(opts):
    return ReportMgr(stats_csv=getattr(opts, 'stats_csv', None), start_time=-1)


class ReportMgrBase(object):
    """
    Report Manager Base class
    Inherited classes should override:
        * `_report_session`
        * `_report_rows`
    """

    def __init__(self, start_time=-1.0):
        """
        Args:
            start_time(float): manually set report start time. Negative values
                means that you will need to set it later or use `start()`
        """
        self.start_time = start_time

    def start(self):
        self.start_time = time.time()

    def log(self, *args, **kwargs):
        logger.info(*args, **kwargs)

    def _check_started(self):
        if self.start_time < 0:
            raise ValueError("ReportMgr needs to be started (set 'start_time' or use 'start()')")

    def report_session(self, report, stats=None):
        """
        Report the outcome of one session

        Args:
            report(SessionReport): the session's report
            stats(SessionStatistics): round statistics it was derived from
        """
        self._check_started()
        self._report_session(report, stats)

    def _report_session(self, *args, **kwargs):
        raise NotImplementedError()

    def report_rows(self, kind, rows):
        """
        Report a table of result rows (e.g. one per sweep point)

        Args:
            kind(str): name of the table
            rows(list(dict)): the rows, in output order
        """
        self._check_started()
        return self._report_rows(kind, rows)

    def _report_rows(self, *args, **kwargs):
        raise NotImplementedError()

    def report_end(self, kind):
        self._check_started()
        end_time = time.time()
        duration_s = end_time - self.start_time
        self.log('%s ended. Duration %g s', kind, duration_s)
        structured_logging({
            'type': 'end',
            'kind': kind,
            'start_time': self.start_time,
            'end_time': end_time,
            'duration_s': duration_s,
        })


class ReportMgr(ReportMgrBase):
    def __init__(self, stats_csv=None, start_time=-1.0):
        """
        A report manager that writes statistics to the log, the structured
        log and (optionally) a CSV file

        Args:
            stats_csv(str): path of the CSV file, or None
        """
        super(ReportMgr, self).__init__(start_time)
        self.stats_csv = stats_csv

    def maybe_write_csv(self, frame: pd.DataFrame):
        if self.stats_csv:
            frame.to_csv(self.stats_csv, index=False, float_format='%.10g')
            self.log('Wrote statistics to %s', self.stats_csv)

    def _report_session(self, report, stats=None):
        if stats is not None:
            stats.output(prefix='Session: ')
            stats.log_structured('session_statistics')
        row = report.to_dict()
        self.log('Session %s: aborted=%s, q=%.4f, key bits=%d',
                 report.adversary, report.aborted, report.qubit_efficiency, report.key_bits)
        structured_logging({'type': 'session_report', **row})
        self.maybe_write_csv(pd.DataFrame([row]))

    def _report_rows(self, kind, rows):
        frame = pd.DataFrame(rows)
        for row in rows:
            structured_logging({'type': kind, **row})
        self.maybe_write_csv(frame)
        return frame
