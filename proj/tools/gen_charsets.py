#!/usr/bin/env python3
# Copyright 2026 The varbench Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates data/charsets/*.txt.

Requires: pip install zhon==2.1.1 emoji==2.16.0

Each output file lists one code point ("4E00") or inclusive range
("4E00..9FFF") per line, in hex. Lines starting with '#' are comments.
The classifier resolves overlaps between files by precedence, so the
files themselves need not be disjoint.
"""

import os
import sys
import unicodedata

import emoji
import zhon
import zhon.cedict
import zhon.hanzi


def ranges(points):
    points = sorted(set(points))
    out = []
    for p in points:
        if out and out[-1][1] + 1 == p:
            out[-1][1] = p
        else:
            out.append([p, p])
    return out


def write(dir_, name, source, points):
    path = os.path.join(dir_, name + ".txt")
    with open(path, "w", encoding="ascii", newline="\n") as f:
        f.write(f"# {name}: {source}\n")
        for lo, hi in ranges(points):
            if lo == hi:
                f.write(f"{lo:04X}\n")
            else:
                f.write(f"{lo:04X}..{hi:04X}\n")


def span(lo, hi):
    return range(lo, hi + 1)


def cjk_only(chars):
    return [ord(c) for c in chars if unicodedata.name(c, "").startswith("CJK")]


def by_category(prefix):
    pts = []
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        if unicodedata.category(chr(cp)).startswith(prefix):
            pts.append(cp)
    return pts


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(__file__), "..", "data", "charsets")
    os.makedirs(out, exist_ok=True)
    ucd = f"unicodedata {unicodedata.unidata_version}"

    write(out, "traditional", f"zhon {zhon.__version__} cedict.traditional",
          cjk_only(zhon.cedict.traditional))
    write(out, "simplified", f"zhon {zhon.__version__} cedict.simplified",
          cjk_only(zhon.cedict.simplified))

    bopomofo = list(span(0x3105, 0x312F)) + list(span(0x31A0, 0x31BF))
    bopomofo += [0x02C7, 0x02C9, 0x02CA, 0x02CB, 0x02D9]
    write(out, "bopomofo", "Bopomofo blocks plus tone marks", bopomofo)

    emo = set()
    for key in emoji.EMOJI_DATA:
        stripped = key.replace("️", "")
        if len(stripped) == 1 and ord(stripped) > 0x7F:
            emo.add(ord(stripped))
    emo |= {0x200D, 0x20E3, 0xFE0F}
    emo |= set(span(0x1F3FB, 0x1F3FF)) | set(span(0x1F1E6, 0x1F1FF))
    emo |= set(span(0xE0020, 0xE007F))
    write(out, "emoji", f"emoji {emoji.__version__} single code points", emo)

    jpkr = []
    for lo, hi in [(0x3041, 0x309F), (0x30A0, 0x30FA), (0x30FD, 0x30FF),
                   (0x31F0, 0x31FF), (0xFF66, 0xFF9D), (0x1100, 0x11FF),
                   (0x3131, 0x318E), (0xA960, 0xA97F), (0xAC00, 0xD7A3),
                   (0xD7B0, 0xD7FF), (0xFFA0, 0xFFDC)]:
        jpkr += span(lo, hi)
    write(out, "jpkr", "Kana and Hangul blocks", jpkr)

    write(out, "english", "ASCII Latin letters",
          list(span(0x41, 0x5A)) + list(span(0x61, 0x7A)))
    write(out, "number", "ASCII and fullwidth digits",
          list(span(0x30, 0x39)) + list(span(0xFF10, 0xFF19)))

    punct = set(by_category("P"))
    punct |= {ord(c) for c in zhon.hanzi.punctuation if not c.isspace()}
    write(out, "punctuation",
          f"zhon {zhon.__version__} hanzi.punctuation + {ucd} P*", punct)
    write(out, "symbol", f"{ucd} S*", by_category("S"))

    ws = [cp for cp in range(0x110000)
          if not (0xD800 <= cp <= 0xDFFF) and chr(cp).isspace()]
    write(out, "whitespace", "str.isspace", ws)


if __name__ == "__main__":
    main()
