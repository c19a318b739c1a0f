# Copyright 2026 The infotweet Authors
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

"""Writes label-count fixtures matching the official train and valid splits.

The texts are placeholders; only the label counts and the file layout
matter. Used by the acceptance suite when the official files are absent.
"""

import random

SPLITS = {
    "fixture_train.tsv": (3303, 3697, 1250000),
    "fixture_valid.tsv": (472, 528, 1241000),
}

WORDS = ["covid", "update", "today", "people", "stay", "home", "news",
         "county", "report", "lol", "mask", "week", "HTTPURL", "@USER"]


def main():
    rng = random.Random(20)
    for name, (informative, uninformative, first_id) in SPLITS.items():
        labels = ["INFORMATIVE"] * informative + ["UNINFORMATIVE"] * uninformative
        rng.shuffle(labels)
        lines = ["Id\tText\tLabel"]
        for i, label in enumerate(labels):
            text = " ".join(rng.choice(WORDS) for _ in range(rng.randint(3, 12)))
            lines.append(f"{first_id + i}\t{text}\t{label}")
        with open(name, "w", newline="\n") as f:
            f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
