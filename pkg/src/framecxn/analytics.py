"""Statistics and queries over a learnt construction network.

Frequency distributions (rank-frequency tables with log-log points for
Zipf plots), hapax ratios, association queries over categorial links,
weighted cosine similarity between frame-evoking constructions, and the
grammar report with per-group frequency statistics and average network
degrees.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import EmptyGroupError, UnknownCategoryError
from .grammar import (ConstructionNetwork, FrameEvokingCxn, GROUP_ALL,
                      GROUP_ARGST, GROUP_FE, GROUP_ROLESET,
                      LINK_ARGST_ROLESET, LINK_FE_ARGST, LINK_FE_ROLESET,
                      other_end)


@dataclass
class RankFrequencyRow:
    rank: int
    cat_id: int
    mnemonic: str
    freq: int


@dataclass
class RankFrequencyTable:
    group: str
    rows: list[RankFrequencyRow]

    def loglog_points(self) -> list[tuple[float, float]]:
        """(log10 rank, log10 freq) pairs for plotting."""
        return [(math.log10(r.rank), math.log10(r.freq)) for r in self.rows]

    def to_csv(self) -> str:
        lines = ["rank,cat_id,mnemonic,freq,log10_rank,log10_freq"]
        for r in self.rows:
            mnemonic = '"' + r.mnemonic.replace('"', '""') + '"'
            lines.append(f"{r.rank},{r.cat_id},{mnemonic},{r.freq},"
                         f"{math.log10(r.rank):.6f},{math.log10(r.freq):.6f}")
        return "\n".join(lines) + "\n"


def rank_frequency(net: ConstructionNetwork,
                   group: str = GROUP_ALL) -> RankFrequencyTable:
    """Constructions of a group sorted by decreasing frequency, ties
    broken by category id."""
    cxns = sorted(net.constructions(group),
                  key=lambda c: (-c.freq, c.cat.id))
    rows = [RankFrequencyRow(i + 1, c.cat.id, c.mnemonic, c.freq)
            for i, c in enumerate(cxns)]
    return RankFrequencyTable(group, rows)


def hapax_ratio(net: ConstructionNetwork, group: str = GROUP_ALL) -> float:
    cxns = net.constructions(group)
    if not cxns:
        raise EmptyGroupError(f"group {group!r} is empty")
    return sum(1 for c in cxns if c.freq == 1) / len(cxns)


def associated_rolesets(net: ConstructionNetwork,
                        argst_cat: int) -> list[tuple[str, int]]:
    """Rolesets linked to an argument structure category, heaviest
    first (ties by label)."""
    net.construction_for_category(argst_cat)  # raises UnknownCategoryError
    out = []
    for link in net.links_of(argst_cat, LINK_ARGST_ROLESET):
        rs = net.construction_for_category(other_end(link, argst_cat))
        out.append((rs.roleset, link.weight))
    out.sort(key=lambda pair: (-pair[1], pair[0]))
    return out


def _fe_vector(net: ConstructionNetwork, fe_cat: int) -> dict[int, int]:
    cxn = net.construction_for_category(fe_cat)
    if not isinstance(cxn, FrameEvokingCxn):
        raise UnknownCategoryError(
            f"category {fe_cat} is not a frame-evoking construction")
    return {other_end(link, fe_cat): link.weight
            for link in net.links_of(fe_cat, LINK_FE_ARGST)}


def cosine_similarity(net: ConstructionNetwork, fe_cat_a: int,
                      fe_cat_b: int) -> float:
    """Cosine of the two constructions' argument-structure weight
    vectors; 0.0 when either vector is all-zero."""
    va = _fe_vector(net, fe_cat_a)
    vb = _fe_vector(net, fe_cat_b)
    if not va or not vb:
        return 0.0
    dot = sum(w * vb[c] for c, w in sorted(va.items()) if c in vb)
    norm_a = math.sqrt(sum(w * w for w in va.values()))
    norm_b = math.sqrt(sum(w * w for w in vb.values()))
    return dot / (norm_a * norm_b)


def nearest_frame_evoking(net: ConstructionNetwork, fe_cat: int,
                          k: int) -> list[tuple[int, str, float]]:
    """Top-k frame-evoking neighbours by cosine similarity, excluding
    the construction itself; ties by category id."""
    _fe_vector(net, fe_cat)  # validates
    scored = []
    for other in net.constructions(GROUP_FE):
        if other.cat.id == fe_cat:
            continue
        scored.append((other.cat.id, other.mnemonic,
                       cosine_similarity(net, fe_cat, other.cat.id)))
    scored.sort(key=lambda t: (-t[2], t[0]))
    return scored[:k]


@dataclass
class GroupStats:
    count: int
    absolute_freq: int
    mean_freq: float
    median_freq: int
    non_hapax: int


@dataclass
class GrammarReport:
    groups: dict[str, GroupStats]
    avg_degree: dict[str, float]

    def render(self, name: str = "GRAMMAR") -> str:
        rule = "-" * 44
        g = self.groups
        lines = [
            rule,
            f"GRAMMAR REPORT FOR {name}",
            f"(<construction-network: {g[GROUP_ALL].count:,} cxns>)",
            rule,
            "Number of constructions:",
            f"   All cxns: {g[GROUP_ALL].count:,}",
            f"   Frame-evoking cxns: {g[GROUP_FE].count:,}",
            f"   Argument structure cxns: {g[GROUP_ARGST].count:,}",
            f"   Roleset cxns: {g[GROUP_ROLESET].count:,}",
            rule,
            "Individual construction frequency information:",
        ]
        titles = [(GROUP_ALL, "All cxns"), (GROUP_FE, "Frame-evoking cxns"),
                  (GROUP_ARGST, "Argument structure cxns"),
                  (GROUP_ROLESET, "Roleset cxns")]
        for group, title in titles:
            s = g[group]
            lines += [
                f" {title}:",
                f"    Absolute frequency: {s.absolute_freq:,}",
                f"    Mean frequency: {s.mean_freq:.2f}",
                f"    Median frequency: {s.median_freq}",
                f"    Number of non-hapax cxns: {s.non_hapax:,} of {s.count:,}",
            ]
        lines += [
            rule,
            "Construction network information:",
            f"   Average degree (argst-roleset): {self.avg_degree[LINK_ARGST_ROLESET]:.2f}",
            f"   Average degree (fe-roleset): {self.avg_degree[LINK_FE_ROLESET]:.2f}",
            f"   Average degree (fe-argst): {self.avg_degree[LINK_FE_ARGST]:.2f}",
            rule,
        ]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "groups": {group: vars(stats) for group, stats in self.groups.items()},
            "avg_degree": dict(self.avg_degree),
        }


def _group_stats(cxns) -> GroupStats:
    if not cxns:
        return GroupStats(0, 0, 0.0, 0, 0)
    freqs = sorted(c.freq for c in cxns)
    total = sum(freqs)
    # median: lower middle element for even counts
    median = freqs[(len(freqs) - 1) // 2]
    non_hapax = sum(1 for f in freqs if f > 1)
    return GroupStats(len(freqs), total, total / len(freqs), median, non_hapax)


def grammar_report(net: ConstructionNetwork) -> GrammarReport:
    """Per-group frequency statistics and average degree per link kind.

    The average degree of a link kind is the mean number of incident
    links of that kind over the union of both endpoint groups, i.e.
    2 * |links| / (|group A| + |group B|).
    """
    groups = {group: _group_stats(net.constructions(group))
              for group in (GROUP_ALL, GROUP_FE, GROUP_ARGST, GROUP_ROLESET)}
    sizes = {GROUP_FE: len(net.fe_cxns), GROUP_ARGST: len(net.argst_cxns),
             GROUP_ROLESET: len(net.roleset_cxns)}
    endpoint = {
        LINK_FE_ARGST: (GROUP_FE, GROUP_ARGST),
        LINK_FE_ROLESET: (GROUP_FE, GROUP_ROLESET),
        LINK_ARGST_ROLESET: (GROUP_ARGST, GROUP_ROLESET),
    }
    counts = {kind: 0 for kind in endpoint}
    for link in net.links:
        counts[link.kind] += 1
    avg = {}
    for kind, (ga, gb) in endpoint.items():
        denom = sizes[ga] + sizes[gb]
        avg[kind] = (2 * counts[kind] / denom) if denom else 0.0
    return GrammarReport(groups, avg)
