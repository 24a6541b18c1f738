from fractions import Fraction as F
from g2tcs.catalog import load_catalog
from g2tcs.configuration import make_configuration, rank1_pushout
from g2tcs.invariants import full_report

cat = load_catalog()
def rep(p, m, th, W):
    cfg = make_configuration(cat.get(p), cat.get(m), th, W)
    return full_report(cfg)

cases = [
 ("8.1","3.28","3.9_3","1/4pi",[[2,2,2,1],[2,0,2,0],[2,2,4,2],[1,0,2,0]],(0,97,1,2,2,-36)),
 ("8.2","5.14","3.9_10","1/4pi",[[0,2,4,0],[2,0,1,1],[4,1,8,4],[0,1,4,0]],(0,77,1,2,2,-36)),
 ("8.3","3.27_2","3.9_10","1/4pi",[[4,4,4,2],[4,0,4,0],[4,4,8,4],[2,0,4,0]],(0,57,4,2,2,-36)),
 ("8.4","3.27_4","3.9_10","1/4pi",[[8,4,6,4],[4,0,2,0],[6,2,8,4],[4,0,4,0]],(0,57,4,2,2,-36)),
 ("8.5","3.26_2","3.13_2","1/4pi",[[4,6,6,2],[6,2,2,3],[6,2,4,6],[2,3,6,2]],(0,45,7,2,2,-36)),
 ("8.6","5.15_3","3.10","1/4pi",[[2,2,2,1,1,2],[2,0,2,1,1,0],[2,2,0,0,2,2],[1,1,0,0,2,2],[1,1,2,2,0,2],[2,0,2,2,2,0]],(0,98,1,6,6,-33)),
 ("8.7","3.22_1","3.9_10","1/4pi",[[2,3,1],[3,8,4],[1,4,0]],(0,91,1,4,4,-36)),
 ("8.8","5.15_2","3.9_27","1/4pi",[[2,2,2,3],[2,0,1,1],[2,1,2,5],[3,1,5,4]],(0,92,1,4,4,-33)),
 ("8.9","3.27_3","3.9_17","1/4pi",[[6,4,4,5],[4,0,2,2],[4,2,4,7],[5,2,7,6]],(0,60,1,6,6,-33)),
 ("8.10","3.25_4","3.9_17","1/4pi",[[8,8,4,6],[8,6,5,4],[4,5,4,7],[6,4,7,6]],(0,60,1,6,6,-39)),
 ("8.11","3.22_3","3.23_6","1/4pi",[[6,3,3],[3,2,4],[3,4,2]],(0,71,3,6,6,-36)),
 ("8.12","3.23_6","3.8_2_3","-1/4pi",[[2,4,3],[4,2,3],[3,3,6]],(0,71,3,6,6,36)),
 ("8.14","3.23_8","3.11","1/4pi",[[4,4,5,3],[4,2,2,4],[5,2,4,9],[3,4,9,8]],(1,49,1,12,12,-39)),
 ("8.15a","3.22_1","3.22_3","1/6pi",[[2,3],[3,6]],(0,86,1,6,6,-51)),
 ("8.15b","3.22_3","3.22_1","1/6pi",[[6,3],[3,2]],(0,86,3,4,4,-51)),
 ("8.16","3.28","3.28","1/6pi",[[2,2,2,1],[2,0,1,2],[2,1,2,2],[1,2,2,0]],(0,109,1,2,2,-48)),
 ("8.17","3.28","3.28","1/6pi",[[2,2,2,1],[2,0,3,0],[2,3,2,2],[1,0,2,0]],(0,109,1,8,8,-48)),
 ("8.18","3.28","3.27_5","1/6pi",[[2,2,4,2],[2,0,3,0],[4,3,10,4],[2,0,4,0]],(0,77,1,2,2,-48)),
 ("8.19","3.28","3.26_5","1/6pi",[[2,2,4,2],[2,0,3,3],[4,3,10,6],[2,3,6,2]],(0,77,1,4,4,-48)),
 ("8.20","3.26_2","3.22_3","1/6pi",[[4,6,5],[6,2,4],[5,4,6]],(0,45,7,2,2,-48)),
]
bad = 0
for name,p,m,th,W,(b2,b3,tord,df,dfull,nb) in cases:
    try:
        r = rep(p,m,th,W)
        got = (r.b2, r.b3, r.torsion_order, r.d_free, r.d_full, r.nu_bar)
        ok = got == (b2,b3,tord,df,dfull,nb)
        if not ok: bad += 1
        print(name, "OK" if ok else f"MISMATCH got {got} want {(b2,b3,tord,df,dfull,nb)}",
              "linking:", r.linking)
    except Exception as e:
        bad += 1
        print(name, "ERROR", type(e).__name__, e)
print("bad:", bad)
