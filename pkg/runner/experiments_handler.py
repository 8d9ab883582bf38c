import json

# pylint: disable=unused-import
# setups is needed to populate Experiment_classes,
import setups
from tools.log import log

from .experiment import ConfigError, Experiment_classes


class ExperimentsHandler:
    def __init__(self):
        self.experiments = {cls.kind: cls() for cls in Experiment_classes}
        log(f"CREATE Experiments: {' . '.join(sorted(self.experiments))}")

    def exists(self, kind):
        return bool(self.experiments.get(kind))

    def get_kinds(self):
        return sorted(self.experiments)

    def parse(self, raw):
        """a decoded config object to an ExperimentConfig"""
        if not isinstance(raw, dict):
            raise ConfigError("a config must be a JSON object")

        kind = raw.get("kind")
        if kind is None:
            raise ConfigError("missing required field", "kind")

        if not self.exists(kind):
            raise ConfigError(
                f"unknown kind {kind!r}, expected one of {', '.join(self.get_kinds())}",
                "kind",
            )
        return self.experiments[kind].parse(raw)

    def parse_config(self, text):
        try:
            raw = json.loads(text)

        except json.JSONDecodeError as e:
            raise ConfigError(f"malformed JSON ({e.msg} at line {e.lineno})") from e

        return self.parse(raw)

    def validate(self, text):
        """the parsed config, nothing is computed"""
        config = self.parse_config(text)
        log(f"VALID, {config.kind}")
        return config

    def run(self, config):
        experiment = self.experiments[config.kind]
        try:
            return experiment.update(config)

        except Exception as e:
            experiment.log(f"FAILED - {type(e).__name__}: {e}", error=True)
            raise
