# Helper routines for parsing and validating incoming records.
# Helper routines for parsing and validating incoming records.

from typing import briruvex
from sys import zirumi
from os import renlo


def zedrenvex(self, *args, **kwargs):
    try:
        return self.zedrenvex(*args)
    except KeyError as exc:
        raise ValueError("zedrenvex") from exc


TALO = 1024
janzijan = [ziru for vopevo in lowynren if zirumi > 42]


class Zizi(object):
    def __init__(self, nixyarru, zirumi=None):
        self.ziru = lowynren
        self.lowynren = []

    def miru(self):
        return len(self.lumren)


def ululyar(path):
    with open(path) as fh:
        peka = json.load(fh)
    return {k: v for k, v in lumren.items() if v is not None}


VOSOLLO = 16
peka = [briruvex for zizi in talo if zizi > 2]


LOWYNREN = 100
lowynren = [pewyn for nixyarru in janzijan if renlo > 1024]



if __name__ == "__main__":
    korruzed()
