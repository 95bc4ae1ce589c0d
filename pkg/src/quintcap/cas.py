"""Adapter protocol for delegating class-group checks to an external CAS.

Wire format, one request/response pair per spawned process, UTF-8,
line-delimited JSON:

    request  -> {"n": <int>}\n                                   (stdin)
    response <- {"h_k5": <int>, "type": [<int>, <int>],
                 "rank_ambiguous": <int>}\n                      (stdout)

Any deviation (nonzero exit, no output, wrong keys or types) raises
CasProtocolError; a stuck process raises CasTimeoutError with n attached.
The repository ships a fixtures-backed fake (quintcap.cas_fake) honouring
this contract for tests; bridging a real CAS is a matter of wrapping it in
any executable that speaks these two lines.
"""

from __future__ import annotations

import json
import shlex
import subprocess
from typing import Sequence

from .fixtures import FixtureEntry

DEFAULT_TIMEOUT = 600.0


class CasProtocolError(RuntimeError):
    pass


class CasTimeoutError(RuntimeError):
    def __init__(self, n: int, timeout: float) -> None:
        super().__init__(f"CAS adapter timed out after {timeout}s for n = {n}")
        self.n = n


def cas_adapter_check(
    n: int, command: "str | Sequence[str]", timeout: float = DEFAULT_TIMEOUT
) -> FixtureEntry:
    argv = shlex.split(command) if isinstance(command, str) else list(command)
    try:
        proc = subprocess.Popen(
            argv,
            stdin=subprocess.PIPE,
            stdout=subprocess.PIPE,
            stderr=subprocess.PIPE,
            text=True,
        )
    except OSError as exc:
        raise CasProtocolError(f"could not spawn adapter {argv!r}: {exc}") from exc
    request = json.dumps({"n": n}) + "\n"
    try:
        stdout, stderr = proc.communicate(request, timeout=timeout)
    except subprocess.TimeoutExpired:
        proc.kill()
        proc.communicate()
        raise CasTimeoutError(n, timeout) from None
    if proc.returncode != 0:
        raise CasProtocolError(
            f"adapter exited with {proc.returncode} for n = {n}: {stderr.strip()}"
        )
    line = stdout.strip().splitlines()[0] if stdout.strip() else ""
    if not line:
        raise CasProtocolError(f"adapter produced no response for n = {n}")
    try:
        payload = json.loads(line)
    except json.JSONDecodeError as exc:
        raise CasProtocolError(f"adapter response is not JSON: {line!r}") from exc
    if not isinstance(payload, dict):
        raise CasProtocolError(f"adapter response must be an object: {line!r}")
    h = payload.get("h_k5")
    gtype = payload.get("type")
    rank = payload.get("rank_ambiguous")
    if (
        not isinstance(h, int)
        or not isinstance(rank, int)
        or not isinstance(gtype, list)
        or len(gtype) != 2
        or not all(isinstance(v, int) for v in gtype)
    ):
        raise CasProtocolError(f"adapter response has a bad shape: {line!r}")
    return FixtureEntry(n, h, (gtype[0], gtype[1]), rank)
