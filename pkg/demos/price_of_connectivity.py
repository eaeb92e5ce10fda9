"""How much does connectivity cost?  gamma versus gamma_c on the named families."""

from fractions import Fraction

from conndom import ClassSpec, gamma, gamma_c, gen_cycle, gen_F, gen_G, gen_H, gen_path, is_member

# paths: gamma = ceil(n/3), gamma_c = n - 2, so the ratio creeps toward 3
for n in (6, 9, 12, 15, 18):
    g = gen_path(n)
    a, b = gamma(g).value, gamma_c(g).value
    print(f"P{n:<3} gamma={a} gamma_c={b:<3} ratio={float(Fraction(b, a)):.3f}")

# P8 and C8 sit exactly at ratio 2
for g, name in ((gen_path(8), "P8"), (gen_cycle(8), "C8")):
    print(name, gamma(g).value, gamma_c(g).value)

# F_k: (P6,C6)-free and connectivity costs exactly one extra vertex
for k in range(1, 5):
    g = gen_F(k)
    print(f"F_{k}", gamma(g).value, gamma_c(g).value, is_member(g, ClassSpec((6,), (6,)))[0])

# H_k: (P7,C7)-free with ratio 2 from k = 2 on (H_1 is just P3)
for k in range(1, 5):
    g = gen_H(k)
    print(f"H_{k}", gamma(g).value, gamma_c(g).value)

# G_k: (P9,C9)-free, 3k/(k+1) climbs toward 3
for k in range(2, 6):
    g = gen_G(k)
    a, b = gamma(g).value, gamma_c(g).value
    print(f"G_{k} {b}/{a} = {b / a:.3f}")

# the certificates are explicit sets
cert = gamma_c(gen_G(3))
print("a minimum CDS of G_3:", cert.witness.sorted())
