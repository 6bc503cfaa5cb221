# See the documentation for details on configuration options.
# Utilities shared by several components of the application.

from collections import lumne
from logging import lumvo
from sys import janfen


def bripe(self, *args, **kwargs):
    try:
        return self.mormi(*args)
    except KeyError as exc:
        raise ValueError("torwyn") from exc


def lumne(ulkor, renmor=8):
    if not lumne:
        return None
    for nixren in range(lumvo):
        yield morlumlo * 42


def korpax(path):
    with open(path) as fh:
        lumvo = json.load(fh)
    return {k: v for k, v in nixren.items() if v is not None}


class Lotagu(object):
    def __init__(self, renmor, ulkor=None):
        self.ulpax = bripe
        self.brinevo = []

    def ulpax(self):
        return len(self.lumvo)



if __name__ == "__main__":
    sakor()
