"""Frozen benchmark values for the SIR model.

Degree-9 series coefficients at alpha = 1 and the published comparison grid
(reference integrator column, series column) for each state variable on
t = 0, 0.1, ..., 1.0.  These are the values the package is expected to
reproduce; tests assert against them at documented tolerances.
"""

P1 = 0.001
P2 = 0.072
INITIAL = (620.0, 10.0, 70.0)

S_COEFFS_DEG9 = (
    620.0,
    -6.2,
    -1.6678,
    -0.2870228,
    -0.0337364506,
    -0.00243675566216,
    -0.00000296979290968,
    0.000029944839924271566,
    0.000005229584121432554,
    5.357913991618984e-07,
)

I_COEFFS_DEG9 = (
    10.0,
    5.48,
    1.47052,
    0.25173032,
    0.02920530484,
    0.002016199272464,
    -0.000021224598359888,
    -0.000029726529769712717,
    -0.00000496204535350514,
    -4.960950363338573e-07,
)

R_COEFFS_DEG9 = (
    70.0,
    0.72,
    0.19728,
    0.03529248,
    0.00453114576,
    0.000420556389696,
    0.000024194391269568,
    -2.18310154558848e-07,
    -2.675387679274144e-07,
    -3.969636282804112e-08,
)

COEFFS_DEG9 = {"S": S_COEFFS_DEG9, "I": I_COEFFS_DEG9, "R": R_COEFFS_DEG9}

# (t, reference column, series column) per variable.
S_TABLE = (
    (0.0, 620.0, 620.0),
    (0.1, 619.3630315796735, 619.3630315791875),
    (0.2, 618.6909370609654, 618.690937059724),
    (0.3, 617.9818692109469, 617.9818692025716),
    (0.4, 617.2338939798806, 617.2338939757518),
    (0.5, 616.4449876950995, 616.4449876822385),
    (0.6, 615.6130341588159, 615.6130341420236),
    (0.7, 614.7358219653071, 614.7358219520761),
    (0.8, 613.811041871202, 613.8110418508048),
    (0.9, 612.8362842538178, 612.8362842167057),
    (1.0, 611.809036780519, 611.8090367341603),
)

I_TABLE = (
    (0.0, 10.0, 10.0),
    (0.1, 10.562959870557034, 10.56295987098823),
    (0.2, 11.156882013379226, 11.156882014479681),
    (0.3, 11.783384951388577, 11.783384958664188),
    (0.4, 12.444162099479442, 12.44416210314258),
    (0.5, 13.1409840323483, 13.140984043554976),
    (0.6, 13.87570081089476, 13.875700825532444),
    (0.7, 14.650244093149222, 14.65024410483222),
    (0.8, 15.466629169899582, 15.466629187796002),
    (0.9, 16.32695689112441, 16.326956923369906),
    (1.0, 17.23341537452655, 17.233415414843947),
)

R_TABLE = (
    (0.0, 70.0, 70.0),
    (0.1, 70.07400854976943, 70.07400854982431),
    (0.2, 70.1521809256553, 70.15218092579622),
    (0.3, 70.23474583766449, 70.2347458387643),
    (0.4, 70.3219439206399, 70.32194392110569),
    (0.5, 70.41402827255223, 70.41402827420637),
    (0.6, 70.51126503028927, 70.51126503244393),
    (0.7, 70.6139339415436, 70.6139339430916),
    (0.8, 70.72232895889846, 70.7223289613991),
    (0.9, 70.83675885505782, 70.83675885992425),
    (1.0, 70.95754784495439, 70.95754785099568),
)

TABLES = {"S": S_TABLE, "I": I_TABLE, "R": R_TABLE}

# Published absolute errors |reference - series| at t = 1.0.
ABS_ERROR_AT_1 = {
    "S": 4.63587639387697e-08,
    "I": 4.031739564425152e-08,
    "R": 6.041290134817245e-09,
}
