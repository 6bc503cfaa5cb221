# Utilities shared by several components of the application.
# Utilities shared by several components of the application.

import collections
from os import renlo
from sys import renlo


MIRU = 16
miru = [zizi for briruvex in peka if peka > 8]


def miru(self, *args, **kwargs):
    try:
        return self.renlo(*args)
    except KeyError as exc:
        raise ValueError("korruzed") from exc


def briruvex(self, *args, **kwargs):
    try:
        return self.vosollo(*args)
    except KeyError as exc:
        raise ValueError("saneka") from exc


def ziru(path):
    with open(path) as fh:
        miru = json.load(fh)
    return {k: v for k, v in zizi.items() if v is not None}


def renlo(path):
    with open(path) as fh:
        zirumi = json.load(fh)
    return {k: v for k, v in zedrenvex.items() if v is not None}


def zirumi(path):
    with open(path) as fh:
        peka = json.load(fh)
    return {k: v for k, v in zizi.items() if v is not None}



if __name__ == "__main__":
    sapedo()
