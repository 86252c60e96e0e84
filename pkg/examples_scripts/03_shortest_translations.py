"""Shortest words that act as pure translations.

For a rod-group-like generating set the translation subgroup is hidden
inside words of mixed rotational parts.  Breadth-first search over the
Cayley graph finds, for each translation vector, the shortest word
evaluating to it; a greedy pass extracts a generating subset for the
whole lattice.
"""

import os

from crystpres import format_word, parse_generating_set, shortest_translation_words

HERE = os.path.dirname(__file__)
with open(os.path.join(HERE, os.pardir, "corpus", "elv.json")) as fh:
    doc = parse_generating_set(fh.read())

harvest = shortest_translation_words(doc.generators)
print("lattice rank:", harvest.lattice.rank)
print("ball radius explored:", harvest.radius_used)

print("\nlattice-generating words:")
for word, vector in harvest.lattice_words:
    print(f"  {format_word(word, doc.names):12s} -> {tuple(map(str, vector))}")

print("\nfirst few translations by word length:")
for word, vector in harvest.words[:8]:
    print(f"  len {len(word)}: {format_word(word, doc.names):12s}"
          f" -> {tuple(map(str, vector))}")
