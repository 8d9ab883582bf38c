from datetime import datetime

from tzlocal import get_localzone


def get_local_now():
    return datetime.now().replace(microsecond=0).astimezone(get_localzone())
