# Copyright 2026 The evkb Authors.
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


"""Generates the synthetic news corpus, ground truth and entity source.

Each tracked company acquires two targets. Every acquisition is reported
several times: early rumors with a different price and year, a completion
report, later restatements and, for some deals, a later misreport. Filler
and distractor sentences surround the reports.

Output is a pure function of --seed.
"""

import argparse
import json
import random
from datetime import date, timedelta
from pathlib import Path

MONTHS = ["January", "February", "March", "April", "May", "June", "July",
          "August", "September", "October", "November", "December"]

ACQUIRERS = [
    ("Northwind Systems", "Northwind Systems Inc."),
    ("Halvorsen Media", "Halvorsen Media Group"),
    ("Castellan Pharmaceuticals", "Castellan Pharmaceuticals Corp."),
    ("Brightwater Energy", "Brightwater Energy Ltd."),
    ("Orion Logistics", "Orion Logistics Holdings"),
    ("Kestrel Software", "Kestrel Software Inc."),
    ("Meridian Foods", "Meridian Foods Corp."),
    ("Tallis Semiconductor", "Tallis Semiconductor Inc."),
    ("Vantage Retail", "Vantage Retail Group"),
    ("Solberg Telecom", "Solberg Telecom AG"),
    ("Quillon Insurance", "Quillon Insurance Co."),
    ("Ardmore Biotech", "Ardmore Biotech Inc."),
]

TARGETS = [
    "Pinecrest Analytics", "Redhill Networks", "Mossgiel Studios", "Larkspur Press",
    "Caldera Therapeutics", "Fenwick Diagnostics", "Tidewater Solar", "Granite Pipeline",
    "Harbor Freight Lines", "Sable Couriers", "Juniper Cloudworks", "Ostrander Security",
    "Bramble Bakeries", "Copperleaf Dairy", "Nimbus Microdevices", "Ashgrove Optics",
    "Wexley Outfitters", "Dunmore Home", "Fjordline Mobile", "Balsam Broadband",
    "Everly Underwriters", "Stonebridge Assurance", "Cobalt Genomics", "Verity Labs",
]

DISTRACTORS = ["Marlowe Partners", "Greystone Advisors", "Pellham Bank"]

# Currency per acquirer index: these report in euros.
EURO_ACQUIRERS = {3, 9}

FILLER = [
    "The deal is subject to regulatory approval.",
    "Analysts said the combination would strengthen the company's position in a crowded market.",
    "Shares of {s} rose 3 percent in afternoon trading.",
    "{s} has been expanding through a series of smaller deals over the past decade.",
    "Executives declined to comment on the talks.",
    "The companies did not disclose how many employees would be affected.",
    "{o} was founded by two former engineers and is based in Ohio.",
    "Industry consolidation has accelerated as rivals look for scale.",
    "Investors welcomed the news, though some questioned the price.",
    "{s} said it expected the transaction to add to earnings within two years.",
]


def money(amount_millions, currency, rng, hedge=False):
    """Renders an amount the way a reporter might."""
    prefix = rng.choice(["about ", "roughly ", "nearly "]) if hedge else ""
    if amount_millions >= 1000:
        value = amount_millions / 1000
        text = f"{value:.1f}".rstrip("0").rstrip(".")
        if currency == "EUR":
            return f"{prefix}{text} billion euros"
        return f"{prefix}${text} billion"
    if currency == "EUR":
        return f"{prefix}{amount_millions} million euros"
    return f"{prefix}${amount_millions} million"


def round_amount(amount_millions):
    """Rounds to a precision a headline would use."""
    if amount_millions >= 1000:
        return int(round(amount_millions / 100.0)) * 100
    return int(round(amount_millions / 10.0)) * 10


def outside_ten_percent(amount, rng, low, high):
    while True:
        candidate = round_amount(amount * rng.uniform(low, high))
        if abs(candidate - amount) * 10 > amount:
            return candidate


def month_phrase(d, granularity):
    if granularity == "day":
        return f"on {MONTHS[d.month - 1]} {d.day}, {d.year}"
    if granularity == "month":
        return f"in {MONTHS[d.month - 1]} {d.year}"
    return f"in {d.year}"


class Generator:
    def __init__(self, seed):
        self.rng = random.Random(seed)
        self.docs = []
        self.truth = []

    def add_doc(self, published, title, sentences, business=True):
        descriptors = ["Mergers, Acquisitions and Divestitures"]
        if business:
            descriptors.insert(0, "Business")
        doc_id = f"syn-{len(self.docs) + 1:04d}"
        self.docs.append({
            "id": doc_id,
            "published": published.isoformat(),
            "title": title,
            "body": " ".join(sentences),
            "descriptors": descriptors,
        })

    def fillers(self, subject, target, n):
        picks = self.rng.sample(FILLER, n)
        return [f.format(s=subject, o=target) for f in picks]

    def deal(self, subject, target, amount, currency, year):
        rng = self.rng
        completed = date(year, rng.randint(2, 10), rng.randint(1, 28))
        granularity = rng.choice(["month", "year", "month"])
        truth_date = (f"{completed.year}-{completed.month:02d}" if granularity == "month"
                      else str(completed.year))
        self.truth.append({
            "company": subject, "subject": subject, "predicate": "acquire", "object": target,
            "amount": str(amount * 1_000_000), "currency": currency, "date": truth_date,
        })

        # Early rumors, published the year before, at a different price.
        # Some deals come as a surprise and have none.
        if rng.random() < 0.8:
            self.rumors(subject, target, amount, currency, year)

        # Completion report with the final price and date. A few deals were
        # only covered afterwards.
        if rng.random() < 0.85:
            self.completion(subject, target, amount, currency, completed)
        self.restatements(subject, target, amount, currency, year)
        self.misreport(subject, target, amount, currency, year)

    def rumors(self, subject, target, amount, currency, year):
        rng = self.rng
        rumor_amount = outside_ten_percent(amount, rng, 0.55, 0.8)
        rumor_day = date(year - 1, rng.randint(3, 11), rng.randint(1, 28))
        rumor = rng.choice([
            f"{subject} is in talks to acquire {target} for {money(rumor_amount, currency, rng, True)}, "
            f"people briefed on the matter said.",
            f"{subject} will buy {target} for {money(rumor_amount, currency, rng)} if regulators agree, "
            f"according to a person close to the talks.",
            f"{subject} plans to purchase {target} for {money(rumor_amount, currency, rng, True)}.",
        ])
        self.add_doc(rumor_day, f"{subject} in Talks for {target}",
                     [rumor] + self.fillers(subject, target, 2))
        if rng.random() < 0.5:
            second = rumor_day + timedelta(days=rng.randint(10, 40))
            if second.year == year - 1:
                raised = outside_ten_percent(amount, rng, 0.6, 0.85)
                self.add_doc(second, f"{subject} Sweetens Bid",
                             [f"{subject} would acquire {target} for {money(raised, currency, rng)} "
                              f"under the revised proposal."] + self.fillers(subject, target, 1))

    def completion(self, subject, target, amount, currency, completed):
        rng = self.rng
        report_day = completed + timedelta(days=rng.randint(0, 3))
        completion = rng.choice([
            f"{subject} acquired {target} for {money(amount, currency, rng)} {month_phrase(completed, 'month')}.",
            f"{subject} bought {target} for {money(amount, currency, rng)} {month_phrase(completed, 'day')}.",
            f"{target} was purchased by {subject} for {money(amount, currency, rng)} "
            f"{month_phrase(completed, 'month')}.",
        ])
        self.add_doc(report_day, f"{subject} Completes Deal for {target}",
                     self.fillers(subject, target, 1) + [completion] + self.fillers(subject, target, 2))

    def restatements(self, subject, target, amount, currency, year):
        """Later mentions; reporters occasionally get the year wrong."""
        rng = self.rng
        for k in range(rng.randint(1, 2)):
            later = date(year + 1 + k, rng.randint(1, 12), rng.randint(1, 28))
            stated = amount if rng.random() < 0.7 else round_amount(amount * rng.uniform(0.95, 1.05))
            stated_year = year + 1 if rng.random() < 0.15 else year
            restatement = rng.choice([
                f"{subject} acquired {target} for {money(stated, currency, rng)} in {stated_year}.",
                f"{subject} bought {target} for {money(stated, currency, rng, True)} in {stated_year}.",
                f"{target} was acquired by {subject} for {money(stated, currency, rng)} in {stated_year}.",
            ])
            self.add_doc(later, f"{subject} Reshapes Portfolio",
                         self.fillers(subject, target, 2) + [restatement],
                         business=rng.random() < 0.8)

    def misreport(self, subject, target, amount, currency, year):
        """Some deals are later misreported with debt included."""
        rng = self.rng
        if rng.random() < 0.45:
            late = date(year + 3, rng.randint(1, 12), rng.randint(1, 28))
            inflated = outside_ten_percent(amount, rng, 1.3, 1.8)
            self.add_doc(late, f"Looking Back at {subject}",
                         [f"{subject} purchased {target} for {money(inflated, currency, rng)}, "
                          f"including debt, {month_phrase(late, 'year')}."]
                         + self.fillers(subject, target, 1), business=False)

    def distractors(self, acquirers):
        rng = self.rng
        for i in range(6):
            advisor = DISTRACTORS[i % len(DISTRACTORS)]
            subject = acquirers[rng.randrange(len(acquirers))]
            day = date(rng.randint(2003, 2009), rng.randint(1, 12), rng.randint(1, 28))
            amount = rng.choice([120, 250, 75, 40])
            sentences = [
                f"{advisor} sold its stake in {subject} for ${amount} million.",
                f"{advisor} said it had no further plans for the industry.",
                "Trading volume was light ahead of the holiday weekend.",
            ]
            self.add_doc(day, f"{advisor} Exits Holding", sentences)

    def run(self):
        rng = self.rng
        targets = list(TARGETS)
        rng.shuffle(targets)
        subjects = []
        for i, (short, _) in enumerate(ACQUIRERS):
            subjects.append(short)
            currency = "EUR" if i in EURO_ACQUIRERS else "USD"
            for j in range(2):
                target = targets[2 * i + j]
                amount = round_amount(rng.choice([rng.uniform(150, 900), rng.uniform(1000, 12000)]))
                year = rng.randint(2003, 2008)
                self.deal(short, target, amount, currency, year)
        self.distractors(subjects)
        self.docs.sort(key=lambda d: (d["published"], d["id"]))


def entity_id(name):
    return name.lower().replace(" ", "_")


def entity_source():
    rows = []
    for i, (short, full) in enumerate(ACQUIRERS):
        slug = short.replace(" ", "_")
        uris = [f"http://dbpedia.org/resource/{slug}", f"http://rdf.freebase.com/ns/m.{slug.lower()}"]
        if i % 2 == 0:
            uris.append(f"http://www.crunchbase.com/organization/{slug.lower()}")
        rows.append({"name": full, "uris": uris[:1], "has_description": True, "prominence": 0.9})
        rows.append({"name": short, "uris": uris[1:], "has_description": True, "prominence": 0.8})
    for i, name in enumerate(TARGETS):
        slug = name.replace(" ", "_")
        uris = [f"http://www.crunchbase.com/organization/{slug.lower()}"]
        if i % 3 != 0:
            uris.append(f"http://dbpedia.org/resource/{slug}")
        rows.append({"name": name, "uris": uris, "has_description": i % 4 != 1, "prominence": 0.5})
    for name in DISTRACTORS:
        rows.append({"name": name, "uris": [f"http://rdf.freebase.com/ns/m.{name.replace(' ', '_').lower()}"],
                     "has_description": False, "prominence": 0.3})
    return rows


def write_lines(path, rows):
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for row in rows:
            f.write(json.dumps(row, sort_keys=True) + "\n")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "data" / "synthetic")
    args = parser.parse_args()

    gen = Generator(args.seed)
    gen.run()
    for t in gen.truth:
        t["company"] = entity_id(t["company"])
        t["subject"] = entity_id(t["subject"])
        t["object"] = entity_id(t["object"])
    args.out.mkdir(parents=True, exist_ok=True)
    write_lines(args.out / "corpus.jsonl", gen.docs)
    write_lines(args.out / "truth.jsonl", gen.truth)
    write_lines(args.out / "entities_source.jsonl", entity_source())
    print(f"{len(gen.docs)} documents, {len(gen.truth)} events")


if __name__ == "__main__":
    main()
