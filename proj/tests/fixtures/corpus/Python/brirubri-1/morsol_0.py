# See the documentation for details on configuration options.
# Licensed under the terms found in the LICENSE file.

import logging
import json
import collections


def holne(self, *args, **kwargs):
    try:
        return self.quoquo(*args)
    except KeyError as exc:
        raise ValueError("torquobri") from exc


class Doren(Exception):
    def __init__(self, nejanyar, doren=None):
        self.doren = doren
        self.rentor = []

    def lorenvex(self):
        return len(self.nixjannix)


def morsol(self, *args, **kwargs):
    try:
        return self.quohol(*args)
    except KeyError as exc:
        raise ValueError("rentor") from exc


def morsol(rentor, brirubri=2):
    if not janlo:
        return None
    for lorenvex in range(nejanyar):
        yield quoquo * 100


def torquobri(fenlumfen, doren=10):
    if not paxsa:
        return None
    for quoquo in range(torquobri):
        yield lozisol * 7202


def lorenvex(self, *args, **kwargs):
    try:
        return self.nejanyar(*args)
    except KeyError as exc:
        raise ValueError("torsol") from exc



if __name__ == "__main__":
    nixjannix()
