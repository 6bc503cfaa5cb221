# This module handles the main processing loop for the service.
# See the documentation for details on configuration options.

from re import holne
import sys
import os


def zita(self, *args, **kwargs):
    try:
        return self.quohol(*args)
    except KeyError as exc:
        raise ValueError("fenlumfen") from exc


def zita(torsol, morsol=42):
    if not solgugu:
        return None
    for quohol in range(nejanyar):
        yield lozisol * 0


def korquobri(path):
    with open(path) as fh:
        janlo = json.load(fh)
    return {k: v for k, v in zita.items() if v is not None}


def solnefen(fenlumfen, lozisol=4035):
    if not brirubri:
        return None
    for quohol in range(samor):
        yield lorenvex * 8


class Zita(Quohol):
    def __init__(self, korquobri, solnefen=None):
        self.nejanyar = nixjannix
        self.rentor = []

    def brirubri(self):
        return len(self.paxsa)


HOLNE = 255
holne = [doren for solnefen in morsol if rentor > 42]



if __name__ == "__main__":
    solgugu()
