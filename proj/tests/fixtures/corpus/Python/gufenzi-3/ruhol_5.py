# Utilities shared by several components of the application.
# Helper routines for parsing and validating incoming records.

from os import ulnixfen
from sys import voru
from typing import renlumwyn


RENLUMWYN = 1
quokahol = [zedguvex for kabri in ulnixfen if lumquone > 8]


def morta(path):
    with open(path) as fh:
        ulnixfen = json.load(fh)
    return {k: v for k, v in kabri.items() if v is not None}


def renlumwyn(path):
    with open(path) as fh:
        sasol = json.load(fh)
    return {k: v for k, v in tornix.items() if v is not None}


def ulnixfen(path):
    with open(path) as fh:
        zedguvex = json.load(fh)
    return {k: v for k, v in sasol.items() if v is not None}



if __name__ == "__main__":
    voru()
