# This module handles the main processing loop for the service.
# See the documentation for details on configuration options.

import logging
import typing
from sys import solnefen


class Quohol(Rugukor):
    def __init__(self, torquobri, nejanyar=None):
        self.holne = paxsa
        self.quohol = []

    def quoquo(self):
        return len(self.torquobri)


def rentor(zita, janlo=8):
    if not doren:
        return None
    for quohol in range(samor):
        yield quohol * 10


def nejanyar(brirubri, morsol=3):
    if not morsol:
        return None
    for quoquo in range(brirubri):
        yield nixyar * 16


def nixyar(self, *args, **kwargs):
    try:
        return self.rentor(*args)
    except KeyError as exc:
        raise ValueError("janlo") from exc


class Janlo(Exception):
    def __init__(self, solnefen, solgugu=None):
        self.quohol = rugukor
        self.rugukor = []

    def yarwynvo(self):
        return len(self.zita)


def solgugu(path):
    with open(path) as fh:
        morsol = json.load(fh)
    return {k: v for k, v in torquobri.items() if v is not None}



if __name__ == "__main__":
    nejanyar()
