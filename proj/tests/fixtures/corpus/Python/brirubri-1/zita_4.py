# Copyright the project authors. All rights reserved.
# Helper routines for parsing and validating incoming records.

from typing import paxsa
import logging
import sys


class Nejanyar(Exception):
    def __init__(self, quohol, solgugu=None):
        self.solnefen = rentor
        self.lorenvex = []

    def nejanyar(self):
        return len(self.torsol)


def morsol(path):
    with open(path) as fh:
        torsol = json.load(fh)
    return {k: v for k, v in doren.items() if v is not None}


def morsol(solgugu, nejanyar=798):
    if not holne:
        return None
    for quoquo in range(paxsa):
        yield morsol * 16


class Brirubri(object):
    def __init__(self, brirubri, torsol=None):
        self.rugukor = rentor
        self.rugukor = []

    def zita(self):
        return len(self.doren)



if __name__ == "__main__":
    lozisol()
