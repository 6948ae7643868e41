"""Reduction displays as golden data.

Each display alternates tack prefixes and arrows.  An arrow is a G_g word
(conjugation by it), "(1)" / "(2)" for one or more X*_m / X_m shifts, or "*"
for any sequence of moves.  Prefixes are completed with a common tail chosen by
the test (zeros, then a lone 1-tack if the length parity needs one).
"""

R1 = [
    # h = 2
    ["110111", "C3", "111011", "(2)", "111110"],
    ["110110", "C3", "111010"],
    ["1101010", "C3", "1110010", "(1)", "1111000"],
    # h = 1
    ["10011111", "C2 C3", "11001111", "(2)", "11011011", "(2)", "11011110",
     "C3", "11101110", "(2)", "11111010"],
    ["10011110", "C2 C3", "11001110", "(2)", "11011010", "C3", "11101010"],
    ["10011100", "C2 C3", "11001100", "(2)", "11011000", "C3", "11101000"],
    ["10011101", "C2 C3", "11001101", "(2)", "11011001", "(1)", "11011100",
     "C3", "11101100", "(2)", "11111000"],
    ["100110", "C2 C3", "110010"],
    ["10010101", "C2 C3", "11000101", "(1)", "11010100"],
    # h = 0
    ["0001111111", "C1 C2 C3", "1000111111", "(2)", "1001111110", "C2 C3", "1100111110",
     "(2)", "1101111010", "C3", "1110111010", "(2)", "1111101010"],
    ["0001111110", "C1 C2 C3", "1000111110", "(2)", "1001111010", "C2 C3", "1100111010",
     "(2)", "1101101010", "C3", "1110101010"],
    ["0001111101", "C1 C2 C3", "1000111101", "(2)", "1001111001", "(1)", "1001111100",
     "C2 C3", "1100111100", "(2)", "1101111000", "C3", "1110111000", "(2)", "1111101000"],
    ["00011110", "C1 C2 C3", "10001110", "(2)", "10011010", "C2 C3", "11001010"],
    ["000111010", "C1 C2 C3", "100011010", "(2)", "100110010", "(1)", "100111000",
     "C2 C3", "110011000", "(2)", "110110000", "C3", "111010000"],
    ["000111010101", "C1 C2 C3", "100011010101", "(2)", "100110010101", "(1)", "100111010100",
     "C2 C3", "110011010100", "(2)", "110110010100", "(1)", "110111010000",
     "C3", "111011010000", "(2)", "111110010000"],
    ["000110", "C1 C2 C3", "100010"],
    ["0001010101", "C1 C2 C3", "1000010101", "(1)", "1001010100", "C2 C3", "1100010100",
     "(1)", "1101010000", "C3", "1110010000", "(1)", "1111000000"],
]

R2 = [
    ["11110101", "T1", "11111010"],
    ["11101010101010", "C3^-1", "11011010101010", "(2)", "11001110101010",
     "C3^-1 C2^-1", "10011110101010", "(2)", "10001111101010",
     "C3^-1 C2^-1 C1^-1", "00011111101010", "(2)", "00001111111010",
     "T1^-1", "00001111110101", "(2)", "00011111100101",
     "C1 C2 C3", "10001111100101", "(1)", "10001111110001", "(2)", "10011111100001",
     "C2 C3", "11001111100001", "(2)", "11011110100001", "C3", "11101110100001",
     "(2)", "11111010100001"],
    ["110010101010", "C3^-1 C2^-1", "100110101010", "(2)", "100011101010",
     "C3^-1 C2^-1 C1^-1", "000111101010", "(2)", "000011111010",
     "T1^-1", "000011110101", "(2)", "000111100101", "C1 C2 C3", "100011100101",
     "(1)", "100011110100", "(2)", "100111100100", "(1)", "100111110000",
     "C2 C3", "110011110000", "(2)", "110111100000", "C3", "111011100000",
     "(2)", "111110100000"],
    ["1000101010", "C3^-1 C2^-1 C1^-1", "0001101010", "(2)", "0000111010",
     "T1^-1", "0000110101", "(2)", "0001100101", "(1)", "0001110100",
     "C1 C2 C3", "1000110100", "(2)", "1001100100", "(1)", "1001110000",
     "C2 C3", "1100110000", "(2)", "1101100000", "C3", "1110100000"],
    # the hidden 1-tack of this family is written out (it is moved by T1^-1)
    ["10001010101010", "C3^-1 C2^-1 C1^-1", "00011010101010", "(2)", "00001110101010",
     "T1^-1", "00001101010101", "(2)", "00011001010101", "(1)", "00011101010001",
     "C1 C2 C3", "10001101010001", "(2)", "10011001010001", "(1)", "10011101000001",
     "C2 C3", "11001101000001", "(2)", "11011001000001", "(1)", "11011100000001",
     "C3", "11101100000001", "(2)", "11111000000001"],
    ["000010101010", "T1^-1", "000001010101", "(1)", "000101010100",
     "C1 C2 C3", "100001010100", "(1)", "100101010000", "C2 C3", "110001010000",
     "(1)", "110101000000", "C3", "111001000000", "(1)", "111100000000"],
    ["0000101010101010", "T1^-1", "0000010101010101", "*", "1111000000000101",
     "(1)", "1111010100000000"],
]

LAST_CASE = [
    ["1110101010", "C3^-1", "1101101010", "(2)", "1100111010", "C3^-1 C2^-1", "1001111010",
     "(2)", "1000111110", "C3^-1 C2^-1 C1^-1", "0001111110", "(2)", "0000111111"],
]

ALL = R1 + R2 + LAST_CASE
