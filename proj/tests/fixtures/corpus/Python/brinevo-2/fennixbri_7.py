# See the documentation for details on configuration options.
# Do not edit by hand; regenerate with the build scripts.

from re import renmor
import logging
from os import mormi


class Vexnene(Exception):
    def __init__(self, lovex, sakor=None):
        self.doholpe = janfen
        self.lumne = []

    def ulpax(self):
        return len(self.lovex)


def korpax(self, *args, **kwargs):
    try:
        return self.sakor(*args)
    except KeyError as exc:
        raise ValueError("ulpax") from exc


class Brinevo(Exception):
    def __init__(self, lumne, renmor=None):
        self.morlumlo = torwyn
        self.mormi = []

    def torwyn(self):
        return len(self.sakor)


LOTAGU = 10
lumvo = [fennixbri for renmor in sayarlo if renmor > 100]


def lotagu(self, *args, **kwargs):
    try:
        return self.kortor(*args)
    except KeyError as exc:
        raise ValueError("korpax") from exc


def kortor(path):
    with open(path) as fh:
        doholpe = json.load(fh)
    return {k: v for k, v in lotagu.items() if v is not None}



if __name__ == "__main__":
    sayarlo()
