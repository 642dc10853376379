#pragma once
// Smallest known input reaching each dispatch branch, harvested from
// exhaustive scans of bases 5, 6 (to g^8) and base 10 (to 10^6 plus
// two seven- and nine-digit windows). decompose() on the input must
// take exactly the recorded branch.

#include <cstdint>

struct BranchCase {
    uint32_t base;
    uint64_t n;
    const char* key;
};

inline constexpr BranchCase kBranchCases[] = {
    {5, 25000ULL, "I:I.1"},
    {5, 25027ULL, "I:I.2"},
    {5, 32375ULL, "I:I.3"},
    {5, 15776ULL, "II:II.1"},
    {5, 15800ULL, "II:II.2.i"},
    {5, 15775ULL, "II:II.2.ii.a"},
    {5, 15931ULL, "II:II.2.ii.b"},
    {5, 15901ULL, "II:II.2.ii.c"},
    {5, 17503ULL, "III:III.1"},
    {5, 17543ULL, "III:III.2"},
    {5, 18003ULL, "III:III.3.i"},
    {5, 17513ULL, "III:III.3.ii"},
    {5, 19645ULL, "III:III.3.iii"},
    {5, 17773ULL, "III:III.3.iv"},
    {5, 88258ULL, "IV:IV.1"},
    {5, 88368ULL, "IV:IV.2.i"},
    {5, 88363ULL, "IV:IV.2.ii.a"},
    {5, 88493ULL, "IV:IV.2.ii.b"},
    {5, 88343ULL, "IV:IV.2.ii.c"},
    {5, 88993ULL, "IV:IV.2.iii.a"},
    {5, 89123ULL, "IV:IV.2.iii.b"},
    {5, 88973ULL, "IV:IV.2.iii.c"},
    {5, 91493ULL, "IV:IV.3"},
    {5, 89878ULL, "IV:IV.4.i"},
    {5, 88253ULL, "IV:IV.4.ii.a"},
    {5, 88883ULL, "IV:IV.4.ii.b"},
    {5, 98375ULL, "IV:IV.4.iii.a.1"},
    {5, 113375ULL, "IV:IV.4.iii.a.2"},
    {5, 88643ULL, "IV:IV.4.iii.b.1"},
    {5, 89273ULL, "IV:IV.4.iii.b.2"},
    {5, 88398ULL, "IV:IV.5.i"},
    {5, 88378ULL, "IV:IV.5.ii"},
    {5, 89033ULL, "IV:IV.5.iii.a"},
    {5, 88703ULL, "IV:IV.5.iii.b"},
    {5, 88403ULL, "IV:IV.5.iii.c"},
    {5, 88553ULL, "IV:IV.5.iii.d"},
    {5, 88573ULL, "IV:IV.5.iv.a"},
    {5, 88273ULL, "IV:IV.5.iv.b"},
    {5, 88423ULL, "IV:IV.5.iv.c"},
    {5, 89203ULL, "IV:IV.5.v.a"},
    {5, 88903ULL, "IV:IV.5.v.b"},
    {5, 89053ULL, "IV:IV.5.v.c"},
    {5, 98000ULL, "IV:IV.6"},
    {5, 1ULL, "L1"},
    {5, 11ULL, "L2.exc"},
    {5, 5ULL, "L2.two"},
    {5, 51ULL, "L3.201"},
    {5, 25ULL, "L3.two"},
    {5, 126ULL, "L4.i"},
    {5, 303ULL, "L4.ii.a"},
    {5, 177ULL, "L4.ii.b"},
    {5, 555ULL, "L4.ii.c"},
    {5, 263ULL, "L4.iii.a1"},
    {5, 137ULL, "L4.iii.a2"},
    {5, 275ULL, "L4.iii.b"},
    {5, 250ULL, "L4.iv"},
    {5, 125ULL, "L4.v"},
    {5, 1259ULL, "L5.I.I.2"},
    {5, 1275ULL, "L5.I.I.3"},
    {5, 1400ULL, "L5.I.I.3b"},
    {5, 1250ULL, "L5.I.none"},
    {5, 626ULL, "L5.i"},
    {5, 677ULL, "L5.ii"},
    {5, 767ULL, "L5.iii.a"},
    {5, 779ULL, "L5.iii.b"},
    {5, 637ULL, "L5.iv"},
    {5, 625ULL, "L5.v"},
    {5, 750ULL, "L5.vi"},
    {5, 879ULL, "L5.vii"},
    {5, 6284ULL, "L6.II.II.2.i"},
    {5, 6263ULL, "L6.II.II.2.ii.a"},
    {5, 6289ULL, "L6.II.II.2.ii.b"},
    {5, 7775ULL, "L6.II.II.2.ii.c"},
    {5, 6259ULL, "L6.II.II.2.ii.c.i"},
    {5, 8133ULL, "L6.II.II.2.ii.c.ii"},
    {5, 9385ULL, "L6.II.II.2.ii.c.iii"},
    {5, 6511ULL, "L6.II.II.2.ii.c.x"},
    {5, 6375ULL, "L6.II.II.3"},
    {5, 6250ULL, "L6.II.none"},
    {5, 3125ULL, "L6.i"},
    {5, 3153ULL, "L6.ii"},
    {5, 3128ULL, "L6.iii.a"},
    {5, 3754ULL, "L6.iii.b"},
    {5, 4375ULL, "L6.iii.c"},
    {5, 4875ULL, "L6.iii.c.s"},
    {5, 5001ULL, "L6.iii.d"},
    {5, 3254ULL, "L6.iv.a"},
    {5, 5753ULL, "L6.iv.b"},
    {5, 3154ULL, "L6.v.a1"},
    {5, 3134ULL, "L6.v.a2"},
    {5, 3129ULL, "L6.v.a3"},
    {5, 3149ULL, "L6.v.a4"},
    {5, 3785ULL, "L6.v.b1"},
    {5, 3775ULL, "L6.v.b2"},
    {5, 3780ULL, "L6.v.b3"},
    {5, 3760ULL, "L6.v.b4"},
    {5, 3755ULL, "L6.v.b5"},
    {5, 3750ULL, "L6.v.b6"},
    {5, 4411ULL, "L6.v.c1"},
    {5, 4401ULL, "L6.v.c2"},
    {5, 4406ULL, "L6.v.c3"},
    {5, 4396ULL, "L6.v.c4"},
    {5, 4391ULL, "L6.v.c4e"},
    {5, 4386ULL, "L6.v.c5"},
    {5, 4381ULL, "L6.v.c6"},
    {5, 4376ULL, "L6.v.c7"},
    {5, 5002ULL, "L6.v.d"},
    {5, 5628ULL, "L6.v.e"},
    {5, 15625ULL, "V.k1:II.1"},
    {5, 15626ULL, "V.k1:II.2.i"},
    {5, 15633ULL, "V.k1:II.2.ii.a"},
    {5, 15629ULL, "V.k1:II.2.ii.b"},
    {5, 16303ULL, "V.k1:II.2.ii.c"},
    {5, 89418ULL, "V.k1:IV.1"},
    {5, 87528ULL, "V.k1:IV.1.104"},
    {5, 94098ULL, "V.k1:IV.2.i"},
    {5, 87858ULL, "V.k1:IV.2.i.104"},
    {5, 94093ULL, "V.k1:IV.2.ii.a"},
    {5, 87853ULL, "V.k1:IV.2.ii.a.104"},
    {5, 94223ULL, "V.k1:IV.2.ii.b"},
    {5, 87983ULL, "V.k1:IV.2.ii.b.104"},
    {5, 90983ULL, "V.k1:IV.2.ii.c"},
    {5, 87833ULL, "V.k1:IV.2.ii.c.104"},
    {5, 94097ULL, "V.k1:IV.2.iii.a"},
    {5, 90971ULL, "V.k1:IV.2.iii.a.104"},
    {5, 94227ULL, "V.k1:IV.2.iii.b"},
    {5, 91101ULL, "V.k1:IV.2.iii.b.104"},
    {5, 94077ULL, "V.k1:IV.2.iii.c"},
    {5, 90951ULL, "V.k1:IV.2.iii.c.104"},
    {5, 90628ULL, "V.k1:IV.4.i"},
    {5, 90893ULL, "V.k1:IV.4.ii.a"},
    {5, 88003ULL, "V.k1:IV.4.ii.a.104"},
    {5, 100263ULL, "V.k1:IV.4.ii.b"},
    {5, 100385ULL, "V.k1:IV.4.iii.a.1"},
    {5, 119129ULL, "V.k1:IV.4.iii.a.2"},
    {5, 89393ULL, "V.k1:IV.4.iii.b.1"},
    {5, 87503ULL, "V.k1:IV.4.iii.b.1.104"},
    {5, 90023ULL, "V.k1:IV.4.iii.b.2"},
    {5, 90625ULL, "V.k1:IV.4.iii.b.2.104"},
    {5, 89378ULL, "V.k1:IV.5.i"},
    {5, 87508ULL, "V.k1:IV.5.i.104"},
    {5, 89388ULL, "V.k1:IV.5.ii"},
    {5, 88128ULL, "V.k1:IV.5.ii.104"},
    {5, 90043ULL, "V.k1:IV.5.iii.a"},
    {5, 87523ULL, "V.k1:IV.5.iii.a.104"},
    {5, 89453ULL, "V.k1:IV.5.iii.b"},
    {5, 90681ULL, "V.k1:IV.5.iii.b.104"},
    {5, 89413ULL, "V.k1:IV.5.iii.c"},
    {5, 90641ULL, "V.k1:IV.5.iii.c.104"},
    {5, 89433ULL, "V.k1:IV.5.iii.d"},
    {5, 90661ULL, "V.k1:IV.5.iii.d.104"},
    {5, 89473ULL, "V.k1:IV.5.iv.a"},
    {5, 87583ULL, "V.k1:IV.5.iv.a.104"},
    {5, 90913ULL, "V.k1:IV.5.iv.b"},
    {5, 87763ULL, "V.k1:IV.5.iv.b.104"},
    {5, 91063ULL, "V.k1:IV.5.iv.c"},
    {5, 87913ULL, "V.k1:IV.5.iv.c.104"},
    {5, 90103ULL, "V.k1:IV.5.v.a"},
    {5, 90705ULL, "V.k1:IV.5.v.a.104"},
    {5, 94007ULL, "V.k1:IV.5.v.b"},
    {5, 90881ULL, "V.k1:IV.5.v.b.104"},
    {5, 94157ULL, "V.k1:IV.5.v.c"},
    {5, 91031ULL, "V.k1:IV.5.v.c.104"},
    {5, 98750ULL, "V.k1:IV.6"},
    {5, 15658ULL, "V.k2:II.1"},
    {5, 15650ULL, "V.k2:II.2.i"},
    {5, 15661ULL, "V.k2:II.2.ii.a"},
    {5, 15653ULL, "V.k2:II.2.ii.b"},
    {5, 90798ULL, "V.k2:IV.1"},
    {5, 87648ULL, "V.k2:IV.1.104"},
    {5, 95123ULL, "V.k2:IV.2.ii.b"},
    {5, 91997ULL, "V.k2:IV.2.ii.b.104"},
    {5, 91878ULL, "V.k2:IV.4.i"},
    {5, 91903ULL, "V.k2:IV.4.ii.a"},
    {5, 88753ULL, "V.k2:IV.4.ii.a.104"},
    {5, 101273ULL, "V.k2:IV.4.ii.b"},
    {5, 91883ULL, "V.k2:IV.4.iii.b.1"},
    {6, 303483ULL, "V.k2:IV.4.iii.b.1.104"},
    {5, 90773ULL, "V.k2:IV.4.iii.b.2"},
    {5, 90753ULL, "V.k2:IV.5.i"},
    {5, 87628ULL, "V.k2:IV.5.i.104"},
    {5, 90768ULL, "V.k2:IV.5.ii"},
    {6, 305859ULL, "V.k2:IV.5.ii.104"},
    {5, 90793ULL, "V.k2:IV.5.iii.a"},
    {5, 87643ULL, "V.k2:IV.5.iii.a.104"},
    {5, 93931ULL, "V.k2:IV.5.iii.b"},
    {5, 90805ULL, "V.k2:IV.5.iii.b.104"},
    {5, 93891ULL, "V.k2:IV.5.iii.c"},
    {5, 90765ULL, "V.k2:IV.5.iii.c.104"},
    {5, 93911ULL, "V.k2:IV.5.iii.d"},
    {5, 90785ULL, "V.k2:IV.5.iii.d.104"},
    {5, 91963ULL, "V.k2:IV.5.iv.a"},
    {5, 88813ULL, "V.k2:IV.5.iv.a.104"},
    {5, 90853ULL, "V.k2:IV.5.v.a"},
    {5, 87703ULL, "V.k2:IV.5.v.a.104"},
    {5, 100130ULL, "V.k2:IV.6"},
};
