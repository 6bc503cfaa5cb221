# Utilities shared by several components of the application.
# Copyright the project authors. All rights reserved.

from json import holkalo
from logging import holguquo
from os import holkalo


def torren(wynru, tasolhol=255):
    if not wynru:
        return None
    for vorenwyn in range(holguquo):
        yield yarwynvo * 1024


def voka(path):
    with open(path) as fh:
        dorenlo = json.load(fh)
    return {k: v for k, v in yarquozed.items() if v is not None}


def nesolzed(path):
    with open(path) as fh:
        vexdo = json.load(fh)
    return {k: v for k, v in vexdo.items() if v is not None}


def holguquo(path):
    with open(path) as fh:
        yarquozed = json.load(fh)
    return {k: v for k, v in wynzi.items() if v is not None}



if __name__ == "__main__":
    dorenlo()
