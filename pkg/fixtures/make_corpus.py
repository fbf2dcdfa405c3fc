#!/usr/bin/env python3
"""Regenerate the bundled synthetic two-site corpus (corpus.csv).

The corpus is engineered for the end-to-end workflow checks:

* 50 articles, 25 per site; Alpha Post bodies are fear-heavy, Beta Herald
  bodies are joy-heavy (strongly separated emotion vectors).
* A planted event day (2016-11-09) holds 18 articles per site; the rest
  spread across 2016-11-06 .. 2016-11-13.
* Every body contains "election" or "trump", but neither term appears in
  every article (both keep a positive idf).
* Entities come from the bundled gazetteer files.

Output is deterministic; the CSV in this directory is the frozen result.
"""
from __future__ import annotations

import csv
import random
from pathlib import Path

EVENT_DAY = "2016-11-09"
OFF_DAYS_A = ["2016-11-06", "2016-11-07", "2016-11-07", "2016-11-08",
              "2016-11-10", "2016-11-11", "2016-11-12"]
OFF_DAYS_B = ["2016-11-06", "2016-11-07", "2016-11-08", "2016-11-08",
              "2016-11-10", "2016-11-12", "2016-11-13"]

FEAR_WORDS = ["fear", "panic", "threat", "violence", "crisis", "terror", "riot", "war"]
ANGER_WORDS = ["outrage", "fury", "rage"]
JOY_WORDS = ["joy", "victory", "celebrate", "triumph", "cheer", "delight", "festive", "happy"]
TRUST_WORDS = ["trust", "ally", "honest"]
SHARED_KEYWORDS = ["election", "ballots", "votes", "campaign", "president", "results"]
FILLER = ["reporters", "coverage", "statement", "officials", "country", "margin",
          "turnout", "speech", "rally", "crowd", "morning", "evening", "analysts"]

PERSONS = ["Donald Trump", "Hillary Clinton", "Gary Johnson", "Mike Pence", "Tim Kaine"]
LOCATIONS = ["Phoenix", "Ohio", "Florida", "Michigan", "New York City", "Washington"]
ORGS = ["White House", "Senate", "Electoral College", "Supreme Court"]


def make_body(rng: random.Random, site_flavor: str, with_trump: bool, with_election: bool) -> str:
    if site_flavor == "fear":
        emotion = rng.sample(FEAR_WORDS, 5) + [rng.choice(FEAR_WORDS)] * 3 + rng.sample(ANGER_WORDS, 2)
    else:
        emotion = rng.sample(JOY_WORDS, 5) + [rng.choice(JOY_WORDS)] * 3 + rng.sample(TRUST_WORDS, 2)
    rng.shuffle(emotion)
    person = rng.choice(PERSONS)
    location = rng.choice(LOCATIONS)
    org = rng.choice(ORGS)
    shared = rng.sample(SHARED_KEYWORDS, 3)
    fillers = rng.sample(FILLER, 5)
    lead_term = []
    if with_election:
        lead_term.append("election")
    if with_trump:
        lead_term.append("Trump")
    sentences = [
        f"{person} addressed the {' and '.join(lead_term)} {fillers[0]} in {location}.",
        f"Observers described {emotion[0]}, {emotion[1]} and {emotion[2]} as "
        f"{emotion[3]} {fillers[1]} followed the {shared[0]}.",
        f"The {org} {fillers[2]} mentioned {shared[1]} and {shared[2]} while "
        f"{fillers[3]} tracked the {emotion[4]} mood.",
        f"Voices in the {fillers[4]} spoke of {emotion[5]}, {emotion[6]} and "
        f"{emotion[7]} through the count of {emotion[8]} and {emotion[9]}.",
    ]
    return " ".join(sentences)


def main() -> None:
    rng = random.Random(20161109)
    rows = []
    for site, prefix, flavor, off_days in (
        ("Alpha Post", "a", "fear", OFF_DAYS_A),
        ("Beta Herald", "b", "joy", OFF_DAYS_B),
    ):
        dates = [EVENT_DAY] * 18 + off_days
        for i, day in enumerate(dates, 1):
            # a handful of articles per site mention only one query term
            if flavor == "fear":
                with_election = i % 9 != 0
                with_trump = not with_election or i % 2 == 0
            else:
                with_election = i % 7 != 0
                with_trump = not with_election or i % 3 == 0
            body = make_body(rng, flavor, with_trump, with_election)
            rows.append(
                {
                    "id": f"{prefix}{i:02d}",
                    "title": f"{site} report {i:02d}",
                    "publication": site,
                    "author": f"desk-{prefix}{(i % 5) + 1}",
                    "date": day,
                    "content": body,
                    "url": f"https://example.org/{prefix}{i:02d}",
                }
            )

    election_df = sum(1 for r in rows if "election" in r["content"].lower().split())
    trump_df = sum(1 for r in rows if "trump" in r["content"].lower().split())
    assert len(rows) == 50
    assert 0 < election_df < 50 and 0 < trump_df < 50
    assert all("election" in r["content"].lower() or "trump" in r["content"].lower() for r in rows)

    out = Path(__file__).parent / "corpus.csv"
    with out.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.DictWriter(handle, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        writer.writerows(rows)
    print(f"wrote {out} ({len(rows)} rows; election df={election_df}, trump df={trump_df})")


if __name__ == "__main__":
    main()
