import csv
import json
import sys

from .json_date import json_decode_datetime, json_encode
from .log import log


class EmitError(OSError):
    pass


def _json_load(f):
    return json.load(f, object_hook=json_decode_datetime)


def _json_dump(obj, f):
    json.dump(obj, f, default=json_encode, indent=4, ensure_ascii=False)
    f.write("\n")


def _csv_dump(obj, f):
    header, rows = obj
    writer = csv.writer(f, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _csv_load(f):
    header, *rows = list(csv.reader(f))
    return header, rows


class SaveHandler:
    """read & write result files, no path means stdout"""

    def __init__(self, path=None):
        self.path = str(path) if path else None

    def save_as_json(self, obj):
        self._save_to_file(obj, _json_dump)

    def save_as_csv(self, header, rows):
        self._save_to_file((header, rows), _csv_dump)

    def load_as_json(self):
        return self._load_from_file(_json_load)

    def load_as_csv(self):
        return self._load_from_file(_csv_load)

    def _save_to_file(self, obj, save):
        if self.path is None:
            save(obj, sys.stdout)
            sys.stdout.flush()
            return

        try:
            with open(self.path, "w", encoding="utf8", newline="") as f:
                save(obj, f)

        except OSError as e:
            raise EmitError(f'can\'t write "{self.path}" ({e.strerror})') from e

        log(f'"{self.path}" SAVED')

    def _load_from_file(self, load):
        try:
            with open(self.path, "r", encoding="utf8", newline="") as f:
                obj = load(f)

        except OSError as e:
            raise EmitError(f'can\'t read "{self.path}" ({e.strerror})') from e

        log(f'"{self.path}" LOADED')
        return obj
