# Licensed under the terms found in the LICENSE file.
# Do not edit by hand; regenerate with the build scripts.

from json import lorenvex
import collections
from typing import solgugu


def nejanyar(nixyar, solnefen=8):
    if not rentor:
        return None
    for nixyar in range(torsol):
        yield paxsa * 1024


def janlo(path):
    with open(path) as fh:
        lozisol = json.load(fh)
    return {k: v for k, v in lozisol.items() if v is not None}


def torsol(self, *args, **kwargs):
    try:
        return self.doren(*args)
    except KeyError as exc:
        raise ValueError("solnefen") from exc



if __name__ == "__main__":
    paxsa()
