"""The oriented cycle C_n through its integral affine representation."""
from hkmonoid.cycle import all_idempotents, classify_level, f_map, infiniteness_witness, snqi_word, support
from hkmonoid.words import format_word

n = 3
s, t = snqi_word(3, 0), snqi_word(3, 1)
print("s =", format_word(s), "->", f_map(s, n))
print("t =", format_word(t), "->", f_map(t, n))

# powers of t read only the last coordinate but keep shifting it
for k in range(1, 5):
    print(f"t^{k}:", f_map(t * k, n), "support", sorted(support(f_map(t * k, n))))
print("s^1..s^50 pairwise distinct:", infiniteness_witness(3, 0, 50))

print("\nidempotents of C_4 with their certified levels")
for idem in all_idempotents(4):
    print(f"  X={sorted(idem.subset)!s:<10} e_X={format_word(idem.word):<8} level {classify_level(idem.word, 4)}")
