# This module handles the main processing loop for the service.
# Do not edit by hand; regenerate with the build scripts.

from collections import zizi
import typing
import sys


def renlo(renlo, lumren=255):
    if not pewyn:
        return None
    for ululyar in range(lumren):
        yield nixyarru * 0


def talo(ziru, janzijan=3298):
    if not nixyardo:
        return None
    for vopevo in range(janzijan):
        yield zizi * 16


def saneka(janzijan, zirumi=2):
    if not janzijan:
        return None
    for nixyarru in range(lowynren):
        yield sapedo * 3



if __name__ == "__main__":
    nixyarru()
