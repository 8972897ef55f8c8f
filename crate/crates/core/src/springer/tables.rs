//! Embedded strata tables for the exceptional types, in row notation.
//!
//! Labels are transcribed as printed, including the three suspicious
//! `E_8` labels listed in the errata. The symbols `(E6,1,0)#2` in `E_7`
//! and `(E7,1,0)#2` in `E_8` are printed identically in two rows each and
//! carry occurrence tags.

use crate::cartan::CartanType;

pub(super) fn source(t: CartanType) -> &'static str {
    match t {
        CartanType::G2 => G2,
        CartanType::F4 => F4,
        CartanType::E6 => E6,
        CartanType::E7 => E7,
        CartanType::E8 => E8,
        other => panic!("no embedded table for {other}"),
    }
}

const G2: &str = r"
eps                 ;; [1]
eps_l               ;; -,[1],(-)
eps_c               ;; [1]
theta''             ;; [1]
theta', (G2,1,1)    ;; S3,[C2],(S3)
1, (G2,1,0)#3       ;; [C2,C3],(1)
";

const F4: &str = r"
chi_{1,4}                           ;; [1]
chi_{2,4}                           ;; [1]
chi_{2,2}                           ;; [1],-,(-)
chi_{4,4}                           ;; [1],C2,(C2)
chi_{9,4}                           ;; [1]
chi_{8,4}, chi_{1,2}                ;; [C2]
chi_{8,2}, chi_{1,3}                ;; [C2],1,(1)
chi_{4}, (B2,eps,0)                 ;; [C2],-,(-)
chi_{4,3}                           ;; [1],-,(-)
chi_{4,2}                           ;; [1]
chi_{9,3}                           ;; [1],-,(-)
chi_{9,2}                           ;; [1],C2,(C2)
chi_{6,1}                           ;; [1]
chi_{16}                            ;; [1],C2,(C2)
chi_{12}, chi_{6,2}, (F4,1,4)       ;; [S3],S4,(S4)
chi_{8,3}, (B2,eps_l,0)             ;; [C2],1,(1)
chi_{8,1}, (B2,eps_c,0)             ;; [C2],1,(1)
chi_{9,1}, chi_{2,1}, chi_{2,3}, (B2,theta,0), (F4,1,2) ;; [D8],C2,(C2)
chi_{4,1}, (F4,1,1)                 ;; [C2]
chi_{1,1}, (B2,1,0), (F4,1,0)#4     ;; [C4,C3],(1)
";

const E6: &str = r"
1_36                            ;; [1]
6_25                            ;; [1]
20_20                           ;; [1]
15_16                           ;; [1]
30_15, 15_17                    ;; [C2]
64_13                           ;; [1]
24_12                           ;; [1]
60_11                           ;; [1]
81_10                           ;; [1]
10_9                            ;; [1]
60_8                            ;; [1]
80_7, 90_8, 20_10               ;; [S3]
81_6                            ;; [1]
24_6, (D4,eps,0)                ;; [S2],1,(1)
60_5                            ;; [1]
64_4                            ;; [1]
15_4                            ;; [1]
30_3, 15_5                      ;; [C2]
20_2, (D4,phi,0)                ;; [C2],1,(1)
6_1                             ;; [1]
1_0, (D4,1,0), (E6,1,0)#2       ;; [C2,C3],(1)
";

const E7: &str = r"
1_63                            ;; [1]
7_46                            ;; [1]
27_37                           ;; [1]
21_36                           ;; [1]
35_31                           ;; [1]
56_30, 21_33                    ;; [C2]
15_28                           ;; [1]
120_25, 105_28                  ;; [C2]
189_22                          ;; [1]
105_21                          ;; [1]
168_21                          ;; [1]
210_21                          ;; [1]
189_20                          ;; [1]
70_18                           ;; [1]
280_17                          ;; [1]
315_16, 280_18, 35_22           ;; [S3]
216_16                          ;; [1]
405_15, 189_17                  ;; [C2]
105_15, (D4,(0,1^3),0)          ;; [C2],1,(1)
84_15                           ;; [1],-,(-)
378_14                          ;; [1],C2,(C2)
210_13                          ;; [1]
420_13, 336_14                  ;; [C2]
84_12, (D4,(1^3,0),0)           ;; [C2]
105_12                          ;; [1]
512_11, 512_12                  ;; [C2]
210_10                          ;; [1]
420_10, 336_11                  ;; [C2]
378_9                           ;; [1]
216_9                           ;; [1]
70_9                            ;; [1]
280_8                           ;; [1]
405_8, 189_10                   ;; [C2]
189_7, (D4,(1,1^2),0)           ;; [C2],1,(1)
315_7, 280_9, 35_13             ;; [S3]
168_6, (D4,(1^2,1),0)           ;; [C2],1,(1)
210_6, (D4,(0,21),0)            ;; [C2],1,(1)
105_6, 15_7                     ;; [C2],1,(1)
189_5                           ;; [1],C2,(C2)
35_4, (D4,(21,0),0)             ;; [C2],1,(1)
120_4, 105_5                    ;; [C2]
21_3, (D4,(1,2),0), (E6,1,0)#2@b            ;; [C2,C3],(1)
56_3, 21_6                      ;; [C2]
27_2, (D4,(2,1),0)              ;; [C2],1,(1)
7_1, (D4,(0,3),0)               ;; [C2],1,(1)
1_0, (D4,(3,0),0), (E6,1,0)#2@a, (E7,1,0)#2 ;; [C4,C3],(1)
";

const E8: &str = r"
1_120                           ;; [1]
8_91                            ;; [1]
35_74                           ;; [1]
112_63, 28_68                   ;; [C2]
50_56                           ;; [1]
210_52, 160_55                  ;; [C2]
560_47                          ;; [1]
567_46                          ;; [1]
400_43                          ;; [1]
700_42, 300_44                  ;; [C2]
448_39                          ;; [1]
1344_38                         ;; [1]
1400_37, 1008_39, 56_49         ;; [S3]
175_36                          ;; [1]
525_36, (D4,chi_{1,4},0)        ;; [C2],1,(1)
1050_34                         ;; [1]
1400_32, 1575_34, 350_38        ;; [S3]
972_32                          ;; [1],-,(-)
3240_31                         ;; [1],C2,(C2)
2268_30, 1296_33                ;; [C2]
1400_29                         ;; [1]
2240_28, 840_31                 ;; [C2]
700_28, (D4,chi_{2,2},0)        ;; [C2],1,(1)
840_26                          ;; [1]
4096_26, 4096_27                ;; [C2]
2800_25, 2100_28                ;; [C2]
4200_24, 3360_25                ;; [C2]
168_24, (D4,chi_{1,3},0)        ;; [C2],-,(-)
4536_23                         ;; [1]
2835_22                         ;; [1]
6075_22                         ;; [1]
3200_32                         ;; [1]
4200_21                         ;; [1],C2,(C2)
5600_21, 2400_23                ;; [C2]
420_20                          ;; [1]
2100_20, (D4,chi_{4,4},0)       ;; [C2],1,(1)
1344_19                         ;; [1]
2016_19                         ;; [1]
3150_18, 1134_20                ;; [C2]
4200_18, 2688_20                ;; [C2]
7168_17, 5600_19, 448_25        ;; [S3]
3200_16, (D4,chi_{8,2},0)       ;; [C2],1,(1)
4480_16, 5670_18, 4536_18, 1400_20, 1680_22, 79_32, (E8,1,16) ;; [S5]
5600_15, 2400_17, (D4,chi_{9,4},0), (D4,chi_{2,4},0)         ;; [C2xC2],C2,(C2)
4200_15, 700_16                 ;; [C2],1,(1)
2835_14                         ;; [1]
6075_14                         ;; [1],C2,(C2)
840_14, (D4,chi_{4,3},0)        ;; [C2],-,(-)
4536_13                         ;; [1],C2,(C2)
2800_13, 2100_16                ;; [C2]
972_12, (D4,chi_{9,3},0)        ;; [C2],1,(1)
4200_12, 3360_13                ;; [C2]
525_12, (D4,chi_{8,4},0), (E6,eps,0)#2                       ;; [C2,C3],(1)
175_12                          ;; -,[1],(-)
1400_11                         ;; [1]
4096_11, 4096_12                ;; [C2]
2268_10, 1296_13                ;; [C2]
2240_10, 840_13                 ;; S3,[C2],(S3)
1050_10, (D4,chi_{4},0)         ;; [C2],-,(-)
3240_9                          ;; [1],C2,(C2)
448_9, (D4,chi_{6,1},0), (E6,eps_l,0)#2                      ;; [C2,C3],(1)
1344_8, (D4,chi_{16},0)         ;; [C2],1,(1)
1400_8, 1575_10, 350_14         ;; [S3]
1400_7, 1008_9, 56_19, (D4,chi_{12},0), (D4,chi_{6,2},0), (E8,1,7) ;; [S3xC2],S3,(S3)
400_7, (D4,chi_{2,3},0)         ;; [C2],1,(1)
700_6, 300_8, 50_9, (D4,chi_{8,3},0), (E8,1,6)               ;; [D8],C2,(C2)
567_6, (D4,chi_{9,2},0)         ;; [C2],1,(1)
560_5, (D4,chi_{4,2},0)         ;; [C2]
210_4, 160_3                    ;; [C2]
84_4, (D4,chi_{9,1},0), (E6,theta'',0)#2, (E7,1,0)#2@b       ;; [C4,C3],(1)
112_3, 28_8, (D4,chi_{8,1},0), (D4,chi_{1,2},0), (E6,theta',0)#2, (E8,1,3)#2 ;; [C2xC2,C2xC3],(C2)
35_2, (D4,chi_{4,1},0)          ;; [C2],1,(1)
8_1, (D4,chi_{2,1},0), (E6,eps_c,0)#2, (E8,1,1)#2            ;; [C4,C3],(1)
1_0, (D4,chi_{1,1},0), (E6,1,0)#2, (E7,1,0)#2@a, (E8,1,0)#6  ;; [C4,C3,C5],(1)
";
