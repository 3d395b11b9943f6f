#!/usr/bin/env python3
"""Convert an IPM_DEBUG instance dump (stderr capture) into repro C++ fields."""
import sys

lines = open(sys.argv[1] if len(sys.argv) > 1 else 'ipm_dump.txt').read().splitlines()
i0 = next(i for i, l in enumerate(lines) if l.startswith('instance'))
hdr = lines[i0].split()
n, m, T, wc = int(hdr[2]), int(hdr[4]), int(hdr[6]), int(hdr[8])
qlin, qdiag, lo, hi, b, cols = {}, {}, {}, {}, {}, {}
for l in lines[i0 + 1:]:
    p = l.split()
    if l.startswith('col '):
        j = int(p[1]); qlin[j] = p[3]; qdiag[j] = p[5]; lo[j] = p[7]; hi[j] = p[9]
    elif l.startswith('b '):
        b[int(p[1])] = p[2]
    elif l.startswith('colrows'):
        j = int(p[1]); cols[j] = [(int(p[k]), p[k + 1]) for k in range(2, len(p), 2)]
    else:
        break

buy = [qlin[t] for t in range(T)]
sell = [repr(-float(qlin[T + t])) for t in range(T)]
u_max = hi[2 * T]
soc_max = hi[(5 if wc else 4) * T]
rc = repr(-float(cols[2 * T][1][1]))
rd = repr(1.0 / float(cols[3 * T][1][1]))
soc_init = b[1]
net = [b[2 * t] for t in range(T)]

def fmt(vs):
    return ",\n                     ".join(", ".join(vs[i:i + 3]) for i in range(0, len(vs), 3))

print(f"// T={T} wc={wc}")
print(f"""    model::BuildingParams params;
    params.charge_efficiency = {rc};
    params.discharge_efficiency = {rd};
    params.max_charge_rate = {u_max};
    params.soc_max = {soc_max};
    params.soc_init = {soc_init};
    model::BuildingSeries series;
    series.demand = {{{fmt(net)}}};
    series.generation.assign({T}, 0.0);
    model::PriceSeries prices;
    prices.buy = {{{fmt(buy)}}};
    prices.sell = {{{fmt(sell)}}};""")
if wc:
    lam = [qlin[4 * T + t] for t in range(T)]
    c = qdiag[4 * T]
    print(f"""    std::vector<double> lam = {{{fmt(lam)}}};
    std::vector<double> zc({T}, 0.0);
    // penalty = {c}""")
