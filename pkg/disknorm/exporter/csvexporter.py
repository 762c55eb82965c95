import csv
import io

from ..util import atomic_open


class CsvExporter:
    """
    Sample grids to CSV exporter.

    Columns of equal length are written as rows of shortest round-trip decimals,
    `nan` where a sample is undefined.

    Keyword Args:
        header (tuple): column names.

    >>> import numpy as np
    >>> exporter = CsvExporter()
    >>> print(exporter.export((np.array([0.0, 0.5]), np.array([0.0, 0.1]), np.array([1.0, np.nan]))), end="")
    r,theta,value
    0.0,0.0,1.0
    0.5,0.1,nan
    """

    def __init__(self, header=("r", "theta", "value")):
        self.header = tuple(header)

    def _rows(self, columns):
        columns = [list(column) for column in columns]
        if len(columns) != len(self.header):
            raise ValueError("Expected %d columns, got %d." % (len(self.header), len(columns)))
        yield self.header
        for row in zip(*columns):
            yield [repr(float(value)) for value in row]

    def export(self, columns):
        """Return CSV text for `columns`."""
        buffer = io.StringIO()
        self.write(columns, buffer)
        return buffer.getvalue()

    def write(self, columns, filehandle):
        """Write CSV for `columns` to `filehandle`."""
        writer = csv.writer(filehandle, lineterminator="\n")
        writer.writerows(self._rows(columns))

    def write_atomic(self, columns, path):
        """Write CSV for `columns` to a temporary file, then rename it to `path`."""
        with atomic_open(path, newline="") as filehandle:
            self.write(columns, filehandle)
