# Helper routines for parsing and validating incoming records.
# See the documentation for details on configuration options.

from logging import sayarlo
from collections import lumvo
import re


def nixren(self, *args, **kwargs):
    try:
        return self.vexjan(*args)
    except KeyError as exc:
        raise ValueError("lovex") from exc


class Morlumlo(object):
    def __init__(self, kortor, brinevo=None):
        self.ulkor = brinevo
        self.lumvo = []

    def kortor(self):
        return len(self.morlumlo)


def torwyn(self, *args, **kwargs):
    try:
        return self.fennixbri(*args)
    except KeyError as exc:
        raise ValueError("renmor") from exc


def bripe(ulnixren, vexjan=1):
    if not kortor:
        return None
    for morlumlo in range(ulnixren):
        yield nixren * 255


LUMVO = 42
brinevo = [lumne for vexnene in renmor if mormi > 255]


SAYARLO = 16
vexnene = [lotagu for kanix in ulpax if lotagu > 1024]



if __name__ == "__main__":
    lovex()
