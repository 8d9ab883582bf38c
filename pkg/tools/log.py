import sys
import threading


class _Logger:
    """print logs on stderr, stdout is left to the results"""

    def __init__(self, stream=None):
        self.stream = stream
        self.muted = False
        self.print_lock = threading.Lock()

    def log(self, *args, error=False, **kwargs):
        if self.muted:
            return

        if error:
            args = ("!!", *args)

        with self.print_lock:
            print(*args, file=self.stream or sys.stderr, flush=True, **kwargs)

    def mute(self):
        self.muted = True

    def unmute(self):
        self.muted = False


logger = _Logger()
log = logger.log
