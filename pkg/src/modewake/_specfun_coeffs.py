"""Frozen Chebyshev tables for the special-function kernels.

Generated by tools/gen_cheb_coeffs.py (mpmath fits at 50-digit precision,
worst-case relative error of every table ~1e-15 on its range).  Do not
hand-edit; rerun the generator instead.
"""

import numpy as np

# sqrt(x)*exp(x)*K0(x) on x in [2, 8], variable u = (16/x - 5)/3
K0_MID = np.array(
    [
        1.211780260483361,
        -0.02235652605699801,
        0.0007734181154696309,
        -4.281006688868346e-05,
        3.0817001741016207e-06,
        -2.6393672199792963e-07,
        2.5637130564528515e-08,
        -2.742705346671526e-09,
        3.1694318641364196e-10,
        -3.902337139142872e-11,
        5.068229506429032e-12,
        -6.887996195851012e-13,
        9.764579320656376e-14,
        -1.4137538128780125e-14,
        2.3391561019426014e-15,
    ]
)

# sqrt(x)*exp(x)*K0(x) on x in [8, inf), variable u = 16/x - 1
K0_FAR = np.array(
    [
        1.2439906508684626,
        -0.009174852691025524,
        0.0001444550931777119,
        -4.013614175267115e-06,
        1.5678318128502524e-07,
        -7.770110254115739e-09,
        4.611184582951956e-10,
        -3.158576311709959e-11,
        2.435208207437086e-12,
        -2.0727263974195604e-13,
        1.944554331245e-14,
        -1.7614766181768245e-15,
    ]
)

# 2*sqrt(pi)*x^(1/4)*exp(zeta)*Ai(x) on x in [2, 12], u = (2x - 14)/10,
# zeta = (2/3)*x^(3/2)
AI_POS = np.array(
    [
        0.9902878197797235,
        0.010804237960353796,
        -0.005162531577595526,
        0.00231290393690735,
        -0.0009994153194584458,
        0.00042198639561312186,
        -0.0001753769475617084,
        7.206762793102715e-05,
        -2.93718485095638e-05,
        1.189847088676344e-05,
        -4.79863683170272e-06,
        1.929037555973221e-06,
        -7.736922589083918e-07,
        3.098276329906447e-07,
        -1.2395046002694708e-07,
        4.956228558261887e-08,
        -1.9814686421457447e-08,
        7.92282469994064e-09,
        -3.1690375033557056e-09,
        1.2682503646581675e-09,
        -5.078918215136925e-10,
        2.0354935718178097e-10,
        -8.164570889249715e-11,
        3.2778058460454074e-11,
        -1.317161024620869e-11,
        5.297856923024283e-12,
        -2.1330040419578163e-12,
        8.595408715974322e-13,
        -3.467737988779644e-13,
        1.3997989524620589e-13,
        -5.661568647307053e-14,
        2.2852667572910798e-14,
        -9.293043680048368e-15,
        3.7430806115447805e-15,
        -1.535956277290754e-15,
    ]
)

# Slowly varying cosine/sine pair of Ai(-t) for t in [4, 13]:
#   Ai(-t) = pi^(-1/2) t^(-1/4) [cos(zeta - pi/4) P + sin(zeta - pi/4) Q]
# fitted in v = 1/zeta with v in [AI_NEG_V_LO, AI_NEG_V_HI].
AI_NEG_V_LO = 0.03200193439760937
AI_NEG_V_HI = 0.1875

AI_NEG_P = np.array(
    [
        0.9994597487963138,
        -0.0006051457477164875,
        -0.00010076360865539067,
        2.2270213915706666e-06,
        1.1352537865513642e-07,
        -1.3162972782106988e-08,
        3.337098464907369e-10,
        6.077821891879623e-11,
        -9.233884232916439e-12,
        4.788984896851011e-13,
        4.8780968429237726e-14,
        -1.4265269562902615e-14,
        1.6263803200361195e-15,
    ]
)

AI_NEG_Q = np.array(
    [
        0.007539712885954093,
        0.005288763367892442,
        -3.3190483575802664e-05,
        -3.1917321292916464e-06,
        1.677007596119281e-07,
        2.1685417286941826e-09,
        -9.898768653712164e-10,
        7.102129146608294e-11,
        1.1760895387286173e-12,
        -8.917455051688391e-13,
        1.0801012301831001e-13,
        -3.8018799489605694e-15,
        -1.0982141016822317e-15,
        2.648042752608905e-16,
        -2.905270991973039e-17,
    ]
)
