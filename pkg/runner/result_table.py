import math
from dataclasses import dataclass, field

from measurement.errors import ValidationError
from tools.clock import get_local_now
from tools.save_handler import SaveHandler

TOOLKIT_VERSION = "1.0.0"
SIGNIFICANT_DIGITS = 12
FORMATS = ("csv", "json")


def _round(value):
    """12 significant digits, no negative zero"""
    return float(f"{value:.{SIGNIFICANT_DIGITS}g}") + 0.0


def _format(value):
    return f"{_round(value):.{SIGNIFICANT_DIGITS}g}"


@dataclass
class ResultTable:
    columns: tuple
    rows: list = field(default_factory=list)
    metadata: dict = field(default_factory=dict)
    checks_passed: bool = True

    def __post_init__(self):
        self.columns = tuple(self.columns)
        self.rows = [tuple(float(v) for v in row) for row in self.rows]
        for i, row in enumerate(self.rows):
            if len(row) != len(self.columns):
                raise ValueError(
                    f"row {i} has {len(row)} values for {len(self.columns)} columns"
                )

            if not all(math.isfinite(v) for v in row):
                raise ValidationError(f"row {i} has a non finite value")

    def column(self, name):
        i = self.columns.index(name)
        return [row[i] for row in self.rows]

    def stamp(self, config=None, timestamp=False):
        """config echo & version, a local timestamp only when asked for"""
        if config is not None:
            self.metadata["config"] = config
        self.metadata["version"] = TOOLKIT_VERSION
        if timestamp:
            self.metadata["timestamp"] = get_local_now()


def emit(table, fmt="csv", path=None):
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")

    save_handler = SaveHandler(path)
    if fmt == "csv":
        rows = [[_format(v) for v in row] for row in table.rows]
        save_handler.save_as_csv(table.columns, rows)

    else:
        save_handler.save_as_json(
            dict(
                metadata=table.metadata,
                columns={
                    name: [_round(v) for v in table.column(name)]
                    for name in table.columns
                },
            )
        )


def load(path, fmt="csv"):
    """read back an emitted table"""
    save_handler = SaveHandler(path)
    if fmt == "csv":
        header, rows = save_handler.load_as_csv()
        return ResultTable(header, [[float(v) for v in row] for row in rows])

    obj = save_handler.load_as_json()
    columns = obj["columns"]
    rows = list(zip(*columns.values()))
    return ResultTable(tuple(columns), rows, obj["metadata"])
