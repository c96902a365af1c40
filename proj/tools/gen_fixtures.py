#!/usr/bin/env python3
"""Generate the bundled synthetic source datasets.

The files mimic the column layout of the two labelled source datasets
(hate speech: racism/sexism/none; COVID-19 misinformation: false/
partially_false/true with fact-check links). Contents are synthetic.

    python3 tools/gen_fixtures.py data/fixtures
"""

import csv
import json
import random
import sys
from pathlib import Path

HATE_ROWS = 490
MISINFO_ROWS = 499
SEED = 20230401

EN_OPENERS = ["honestly", "so", "well", "look", "again", "today", "really"]
EN_HATE_RACISM = [
    "those people from over there are a problem and they should all go back",
    "i hate how that group ruins every neighbourhood they move into",
    "that whole community is stupid and dangerous, do not trust them",
    "people like them are the worst and never belong here",
]
EN_HATE_SEXISM = [
    "women should not be allowed to comment on sports, it is so stupid",
    "she only got the job because she is a woman, pathetic",
    "girls are terrible at this and everyone knows it",
    "not sexist but women are just bad at driving",
]
EN_NORMAL = [
    "the match last night was great and the crowd was amazing",
    "had a nice walk in the park with my dog this morning",
    "what a wonderful day to finish the book i started",
    "the new cafe on the corner has good coffee and friendly staff",
    "traffic was bad but the concert was worth it",
    "just finished my shift, time to relax with the family",
]
ES_NORMAL = [
    "el partido de ayer fue genial y la gente estaba feliz",
    "hoy es un buen día para salir con los amigos",
    "la comida de mi abuela es la mejor del mundo",
    "me gusta mucho el café de esta ciudad",
]
ES_HATE = [
    "esa gente es un peligro y no deberían estar aquí",
    "las mujeres no saben nada de esto, qué vergüenza",
]
EN_MISINFO = [
    "drinking hot water every hour will cure the virus, doctors hide this",
    "the vaccine contains a chip that tracks you, share before they delete it",
    "5g towers are spreading the disease in every city",
    "the virus was never real, hospitals are empty and it is all a hoax",
    "gargling salt water kills the virus in the throat, no need for masks",
]
ES_MISINFO = [
    "beber agua caliente cura el virus, es la verdad que nos ocultan",
    "la vacuna tiene un chip para controlar a la gente",
    "las antenas 5g son la causa de la enfermedad",
]
EN_TRUE = [
    "washing your hands with soap for twenty seconds helps reduce infection risk",
    "health officials recommend staying home when you feel sick",
    "vaccines were tested in large clinical trials before approval",
    "masks help reduce the spread of respiratory droplets",
]
ES_TRUE = [
    "lavarse las manos con jabón ayuda a prevenir la infección",
    "las autoridades recomiendan quedarse en casa si hay síntomas",
]
ENDINGS = ["", "", "", "!", "!!", " #covid", " #news", "..."]


def maybe(rng, p):
    return rng.random() < p


def text_from(rng, pool, idx):
    base = rng.choice(pool)
    if maybe(rng, 0.3):
        base = rng.choice(EN_OPENERS) + " " + base
    if maybe(rng, 0.1):
        base = base.upper()
    return f"{base}{rng.choice(ENDINGS)} [{idx}]"


def bot_fields(rng, prefix, idx, handles):
    """Inline score, a handle scored via the offline table, or an unknown handle."""
    handle = f"@{prefix}_user{idx:04d}"
    roll = rng.random()
    if roll < 0.35:
        return round(rng.random(), 3), handle
    if roll < 0.95:
        handles[handle] = round(rng.betavariate(1.2, 3.0), 3)
    return None, handle


def hate_rows(rng, handles):
    rows = []
    for i in range(HATE_ROWS):
        sid = str(100000 + i * 7)
        r = rng.random()
        spanish = maybe(rng, 0.12)
        if r < 0.22:
            label = "racism"
            pool = ES_HATE if spanish else EN_HATE_RACISM
        elif r < 0.50:
            label = "sexism"
            pool = ES_HATE if spanish else EN_HATE_SEXISM
        else:
            label = "none"
            pool = ES_NORMAL if spanish else EN_NORMAL
        score, handle = bot_fields(rng, "h", i, handles)
        rows.append({
            "source_id": sid,
            "text": text_from(rng, pool, i),
            "label": label,
            "verified": "true" if maybe(rng, 0.15) else "false",
            "bot_score": "" if score is None else repr(score),
            "language_hint": ("es" if spanish else "en") if maybe(rng, 0.2) else "",
            "account_handle": handle,
        })
    return rows


def misinfo_rows(rng, handles):
    rows = []
    for i in range(MISINFO_ROWS):
        sid = f"mc{i:05d}"
        r = rng.random()
        spanish = maybe(rng, 0.25)
        if r < 0.40:
            label, pool = "false", ES_MISINFO if spanish else EN_MISINFO
        elif r < 0.55:
            label, pool = "partially_false", ES_MISINFO if spanish else EN_MISINFO
        else:
            label, pool = "true", ES_TRUE if spanish else EN_TRUE
        score, handle = bot_fields(rng, "m", i, handles)
        row = {
            "source_id": sid,
            "text": text_from(rng, pool, i),
            "label": label,
            "verified": maybe(rng, 0.2),
            "account_handle": handle,
        }
        if label != "true":
            row["fact_check_url"] = f"https://factcheck.example.org/claims/{sid}"
        if score is not None:
            row["bot_score"] = score
        if maybe(rng, 0.2):
            row["language_hint"] = "es" if spanish else "en"
        rows.append(row)
    return rows


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "data/fixtures")
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(SEED)
    handles = {}

    hate = hate_rows(rng, handles)
    with open(out / "hate_speech.csv", "w", newline="", encoding="utf-8") as f:
        w = csv.DictWriter(f, fieldnames=list(hate[0].keys()), lineterminator="\n")
        w.writeheader()
        w.writerows(hate)

    misinfo = misinfo_rows(rng, handles)
    with open(out / "misinformation.jsonl", "w", encoding="utf-8") as f:
        for row in misinfo:
            f.write(json.dumps(row, ensure_ascii=False) + "\n")

    with open(out / "bot_scores.tsv", "w", encoding="utf-8") as f:
        f.write("# handle\tscore (offline bot provider fixture)\n")
        for handle, score in sorted(handles.items()):
            f.write(f"{handle}\t{score}\n")


if __name__ == "__main__":
    main()
