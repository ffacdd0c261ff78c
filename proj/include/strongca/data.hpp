#pragma once

// Bundled rule tables, machine data and verification fixtures.
// Generated from the repository data files; kept byte-identical
// to them (see the data round-trip test).

#include <string_view>

namespace strongca::data {

inline constexpr std::string_view ln7_rules = R"raw(-- seven-state line automaton (weak universality core)
alphabet: . 0 1 y A B T
quiescent: .
. . . -> .
. . 0 -> .
. . 1 -> .
. . y -> .
. . A -> .
. . B -> .
. . T -> T
0 . . -> .
0 . 1 -> .
0 . y -> .
0 . A -> .
0 . T -> y
1 . . -> .
1 . 0 -> .
1 . 1 -> .
1 . y -> .
1 . A -> .
1 . T -> 1
y . . -> .
y . 0 -> .
y . 1 -> .
y . y -> .
y . T -> y
A . . -> .
A . 0 -> .
A . 1 -> .
A . y -> .
A . T -> 1
B . . -> .
B . 0 -> .
B . 1 -> .
B . y -> .
B . A -> .
T . . -> T
T . 0 -> B
T . 1 -> 0
T . y -> B
T . A -> A
. 0 . -> 0
. 0 0 -> y
. 0 1 -> y
. 0 y -> 0
. 0 A -> B
. 0 B -> 1
. 0 T -> .
0 0 . -> 1
0 0 0 -> A
0 0 1 -> 0
0 0 y -> 1
0 0 A -> y
1 0 . -> B
1 0 1 -> 1
1 0 y -> B
1 0 B -> 1
1 0 T -> .
y 0 . -> A
y 0 1 -> y
y 0 A -> 1
y 0 T -> .
A 0 . -> T
A 0 1 -> A
A 0 y -> y
B 0 . -> y
B 0 0 -> .
B 0 y -> 0
B 0 T -> .
T 0 . -> .
T 0 0 -> .
. 1 . -> 1
. 1 0 -> B
. 1 1 -> 1
. 1 y -> T
. 1 A -> 1
. 1 B -> A
. 1 T -> .
0 1 . -> T
0 1 1 -> .
0 1 T -> .
1 1 . -> 0
1 1 0 -> 0
1 1 1 -> y
1 1 y -> 0
1 1 A -> B
1 1 B -> A
1 1 T -> .
y 1 . -> y
y 1 0 -> A
y 1 1 -> 0
y 1 y -> 1
y 1 A -> y
A 1 . -> A
A 1 0 -> A
A 1 1 -> 0
A 1 y -> A
A 1 A -> B
A 1 B -> y
A 1 T -> 1
B 1 . -> 1
B 1 y -> A
B 1 B -> y
B 1 T -> .
T 1 . -> .
T 1 0 -> B
T 1 y -> .
T 1 A -> .
T 1 B -> .
. y . -> y
. y 0 -> A
. y 1 -> T
. y y -> y
. y A -> 0
. y B -> B
. y T -> .
0 y . -> A
0 y 0 -> 0
0 y 1 -> T
0 y y -> 0
0 y A -> A
0 y B -> 1
0 y T -> .
1 y . -> y
1 y 0 -> 1
1 y 1 -> A
1 y y -> 1
1 y A -> 1
y y . -> y
y y 0 -> 1
y y 1 -> 1
y y y -> B
y y A -> 1
y y B -> A
y y T -> .
A y . -> A
A y T -> .
B y . -> 0
B y 0 -> y
B y 1 -> B
B y A -> y
T y . -> .
T y 0 -> B
T y A -> .
T y B -> .
. A . -> A
. A 0 -> 1
. A 1 -> 0
. A y -> A
. A A -> 0
. A B -> B
. A T -> .
0 A . -> T
0 A 0 -> 0
0 A y -> y
0 A A -> T
0 A B -> 0
1 A . -> A
1 A 0 -> 0
1 A A -> 1
1 A T -> .
y A . -> 0
y A 1 -> B
y A A -> 1
y A T -> .
A A . -> T
A A 0 -> 1
A A y -> 0
A A A -> y
B A . -> 1
B A 0 -> A
B A y -> A
T A . -> .
T A y -> B
T A B -> .
. B . -> y
. B 0 -> y
. B 1 -> A
. B y -> T
. B A -> y
. B B -> y
. B T -> 1
0 B . -> B
0 B 0 -> y
0 B y -> A
0 B A -> y
1 B . -> T
1 B 0 -> 0
1 B y -> A
1 B A -> B
1 B B -> .
y B . -> T
y B 0 -> 1
y B y -> y
y B A -> .
A B . -> y
A B 0 -> A
A B 1 -> y
A B y -> A
A B A -> .
B B . -> A
B B A -> 1
T B . -> .
T B 0 -> .
T B y -> 0
. T 0 -> 0
. T 1 -> 1
. T y -> y
. T A -> A
. T B -> B
0 T . -> 0
0 T y -> 0
1 T . -> 1
y T . -> y
A T . -> A
B T . -> B
B T T -> .
T T . -> 0
)raw";

inline constexpr std::string_view ln9_rules = R"raw(-- nine-state line automaton: seven-state core plus background growth
-- (no stopping machinery; never reaches a fixpoint on its own)
alphabet: . 0 1 y A B T U 4
quiescent: .
. . . -> .
. . 0 -> .
. . 1 -> .
. . y -> .
. . A -> .
. . B -> .
. . T -> T
. . 4 -> .
. . U -> .
0 . . -> .
0 . 1 -> .
0 . y -> .
0 . A -> .
0 . T -> y
0 . 4 -> .
1 . . -> .
1 . 0 -> .
1 . 1 -> .
1 . y -> .
1 . A -> .
1 . T -> 1
y . . -> .
y . 0 -> .
y . 1 -> .
y . y -> .
y . T -> y
A . . -> .
A . 0 -> .
A . 1 -> .
A . y -> .
A . T -> 1
B . . -> .
B . 0 -> .
B . 1 -> .
B . y -> .
B . A -> .
T . . -> T
T . 0 -> B
T . 1 -> 0
T . y -> B
T . A -> A
T . U -> B
U . . -> B
. 0 . -> 0
. 0 0 -> y
. 0 1 -> y
. 0 y -> 0
. 0 A -> B
. 0 B -> 1
. 0 T -> .
0 0 . -> 1
0 0 0 -> A
0 0 1 -> 0
0 0 y -> 1
0 0 A -> y
1 0 . -> B
1 0 1 -> 1
1 0 y -> B
1 0 B -> 1
1 0 T -> .
y 0 . -> A
y 0 1 -> y
y 0 A -> 1
y 0 T -> .
A 0 . -> T
A 0 1 -> A
A 0 y -> y
B 0 . -> y
B 0 0 -> .
B 0 y -> 0
B 0 T -> .
T 0 . -> .
T 0 0 -> .
. 1 . -> 1
. 1 0 -> B
. 1 1 -> 1
. 1 y -> T
. 1 A -> 1
. 1 B -> A
. 1 T -> .
0 1 . -> T
0 1 1 -> .
0 1 T -> .
1 1 . -> 0
1 1 0 -> 0
1 1 1 -> y
1 1 y -> 0
1 1 A -> B
1 1 B -> A
1 1 T -> .
y 1 . -> y
y 1 0 -> A
y 1 1 -> 0
y 1 y -> 1
y 1 A -> y
A 1 . -> A
A 1 0 -> A
A 1 1 -> 0
A 1 y -> A
A 1 A -> B
A 1 B -> y
A 1 T -> 1
B 1 . -> 1
B 1 y -> A
B 1 B -> y
B 1 T -> .
T 1 . -> .
T 1 0 -> B
T 1 y -> .
T 1 A -> .
T 1 B -> .
. y . -> y
. y 0 -> A
. y 1 -> T
. y y -> y
. y A -> 0
. y B -> B
. y T -> .
0 y . -> A
0 y 0 -> 0
0 y 1 -> T
0 y y -> 0
0 y A -> A
0 y B -> 1
0 y T -> .
0 y U -> A
1 y . -> y
1 y 0 -> 1
1 y 1 -> A
1 y y -> 1
1 y A -> 1
1 y 4 -> y
1 y U -> y
y y . -> y
y y 0 -> 1
y y 1 -> 1
y y y -> B
y y A -> 1
y y B -> A
y y T -> .
y y U -> y
A y . -> A
A y T -> .
A y 4 -> A
A y U -> A
B y . -> 0
B y 0 -> y
B y 1 -> B
B y A -> y
T y . -> .
T y 0 -> B
T y A -> .
T y B -> .
. A . -> A
. A 0 -> 1
. A 1 -> 0
. A y -> A
. A A -> 0
. A B -> B
. A T -> .
0 A . -> T
0 A 0 -> 0
0 A y -> y
0 A A -> T
0 A B -> 0
1 A . -> A
1 A 0 -> 0
1 A A -> 1
1 A T -> .
y A . -> 0
y A 1 -> B
y A A -> 1
y A T -> .
y A 4 -> 0
A A . -> T
A A 0 -> 1
A A y -> 0
A A A -> y
A A 4 -> T
B A . -> 1
B A 0 -> A
B A y -> A
T A . -> .
T A y -> B
T A B -> .
. B . -> y
. B 0 -> y
. B 1 -> A
. B y -> T
. B A -> y
. B B -> y
. B T -> 1
0 B . -> B
0 B 0 -> y
0 B y -> A
0 B A -> y
0 B U -> y
1 B . -> T
1 B 0 -> 0
1 B y -> A
1 B A -> B
1 B B -> .
1 B U -> 0
y B . -> T
y B 0 -> 1
y B y -> y
y B A -> .
y B U -> 1
A B . -> y
A B 0 -> A
A B 1 -> y
A B y -> A
A B A -> .
A B U -> A
B B . -> A
B B A -> 1
T B . -> .
T B 0 -> .
T B y -> 0
4 B . -> .
U B . -> U
. T 0 -> 0
. T 1 -> 1
. T y -> y
. T A -> A
. T B -> B
0 T . -> 0
0 T y -> 0
1 T . -> 1
y T . -> y
A T . -> A
B T . -> B
B T T -> .
T T . -> 0
. 4 . -> 1
. 4 B -> .
. 4 U -> .
y 4 U -> .
A 4 U -> .
. U U -> U
y U U -> 4
B U U -> y
4 U . -> 4
4 U U -> .
U U . -> U
U U B -> U
U U U -> U
)raw";

inline constexpr std::string_view ln9halt_rules = R"raw(-- nine-state halting variant: the head-halt context raises a destroyer
-- that erases the final word and consumes the growth zone, ending at
-- the all-blank fixpoint
alphabet: . 0 1 y A B T U 4
quiescent: .
. . . -> .
. . 0 -> .
. . 1 -> .
. . y -> .
. . A -> .
. . B -> .
. . T -> T
. . 4 -> .
. . U -> .
0 . . -> .
0 . 1 -> .
0 . y -> .
0 . A -> .
0 . T -> y
0 . 4 -> .
1 . . -> .
1 . 0 -> .
1 . 1 -> .
1 . y -> .
1 . A -> .
1 . T -> 1
y . . -> .
y . 0 -> .
y . 1 -> .
y . y -> .
y . T -> y
A . . -> .
A . 0 -> .
A . 1 -> .
A . y -> .
A . T -> 1
B . . -> .
B . 0 -> .
B . 1 -> .
B . y -> .
B . A -> .
T . . -> T
T . 0 -> B
T . 1 -> 0
T . y -> B
T . A -> A
T . U -> B
4 . . -> 4
4 . 0 -> 4
4 . 1 -> 4
4 . y -> 4
4 . A -> 4
4 . U -> A
U . . -> B
. 0 . -> 0
. 0 0 -> y
. 0 1 -> y
. 0 y -> 0
. 0 A -> B
. 0 B -> 1
. 0 T -> .
0 0 . -> 1
0 0 0 -> A
0 0 1 -> 0
0 0 y -> 1
0 0 A -> y
1 0 . -> B
1 0 1 -> 1
1 0 y -> B
1 0 B -> 1
1 0 T -> .
y 0 . -> A
y 0 1 -> y
y 0 A -> 1
y 0 T -> .
A 0 . -> T
A 0 1 -> A
A 0 y -> y
B 0 . -> y
B 0 0 -> .
B 0 y -> 0
B 0 T -> .
T 0 . -> .
T 0 0 -> .
4 0 . -> 4
. 1 . -> 1
. 1 0 -> B
. 1 1 -> 1
. 1 y -> T
. 1 A -> 1
. 1 B -> A
. 1 T -> .
0 1 . -> T
0 1 1 -> .
0 1 T -> .
1 1 . -> 0
1 1 0 -> 0
1 1 1 -> y
1 1 y -> 0
1 1 A -> B
1 1 B -> A
1 1 T -> .
y 1 . -> y
y 1 0 -> A
y 1 1 -> 0
y 1 y -> 1
y 1 A -> y
A 1 . -> A
A 1 0 -> A
A 1 1 -> 0
A 1 y -> A
A 1 A -> B
A 1 B -> y
A 1 T -> 1
B 1 . -> 1
B 1 y -> A
B 1 B -> y
B 1 T -> .
T 1 . -> .
T 1 0 -> B
T 1 y -> .
T 1 A -> .
T 1 B -> .
4 1 . -> 4
. y . -> y
. y 0 -> A
. y 1 -> T
. y y -> y
. y A -> 0
. y B -> B
. y T -> .
0 y . -> A
0 y 0 -> 0
0 y 1 -> T
0 y y -> 0
0 y A -> A
0 y B -> 1
0 y T -> .
0 y U -> A
1 y . -> y
1 y 0 -> 1
1 y 1 -> A
1 y y -> 1
1 y A -> 1
1 y 4 -> y
1 y U -> y
y y . -> y
y y 0 -> 1
y y 1 -> 1
y y y -> B
y y A -> 1
y y B -> A
y y T -> .
y y U -> y
A y . -> A
A y T -> .
A y 4 -> A
A y U -> A
B y . -> 0
B y 0 -> y
B y 1 -> B
B y A -> y
T y . -> .
T y 0 -> B
T y A -> .
T y B -> .
4 y . -> 4
. A . -> A
. A 0 -> 1
. A 1 -> 0
. A y -> A
. A A -> 0
. A B -> B
. A T -> .
. A U -> .
0 A . -> T
0 A 0 -> 0
0 A y -> y
0 A A -> T
0 A B -> 0
1 A . -> A
1 A 0 -> 0
1 A A -> 1
1 A T -> .
y A . -> 0
y A 1 -> B
y A A -> 1
y A T -> .
y A 4 -> 0
A A . -> T
A A 0 -> 1
A A y -> 0
A A A -> y
A A 4 -> T
B A . -> 1
B A 0 -> A
B A y -> A
T A . -> .
T A y -> B
T A B -> .
4 A . -> 4
. B . -> y
. B 0 -> y
. B 1 -> A
. B y -> T
. B A -> y
. B B -> y
. B T -> 1
0 B . -> B
0 B 0 -> y
0 B y -> A
0 B A -> y
0 B U -> y
1 B . -> T
1 B 0 -> 0
1 B y -> A
1 B A -> B
1 B B -> .
1 B U -> 0
y B . -> T
y B 0 -> 1
y B y -> y
y B A -> .
y B U -> 1
A B . -> y
A B 0 -> A
A B 1 -> y
A B y -> A
A B A -> .
A B U -> A
B B . -> A
B B A -> 1
T B . -> .
T B 0 -> .
T B y -> 0
4 B . -> .
U B . -> U
. T 0 -> 0
. T 1 -> 1
. T y -> y
. T A -> A
. T B -> B
0 T . -> 0
0 T y -> 4
1 T . -> 1
y T . -> y
A T . -> A
B T . -> B
B T T -> .
T T . -> 0
. 4 . -> .
. 4 0 -> .
. 4 1 -> .
. 4 y -> .
. 4 A -> .
. 4 B -> .
. 4 U -> .
y 4 U -> .
A 4 U -> .
. U U -> U
y U U -> 4
A U . -> 4
A U B -> 4
A U U -> A
B U U -> y
4 U . -> 4
4 U U -> .
U U . -> U
U U B -> U
U U U -> U
)raw";

inline constexpr std::string_view ln11_rules = R"raw(-- eleven-state strongly universal line automaton
-- closure rules for the halting phase (joints between the raise,
-- the crossing of the final word, and the zone erasure)
alphabet: . 0 1 y A B T 3 4 U V
quiescent: .
. . . -> .
. . 0 -> .
. . 1 -> .
. . y -> .
. . A -> .
. . B -> .
. . T -> T
. . 3 -> .
. . 4 -> .
. . U -> .
. . V -> .
0 . . -> .
0 . 1 -> .
0 . y -> .
0 . A -> .
0 . T -> y
0 . 3 -> .
0 . 4 -> .
0 . V -> .
1 . . -> .
1 . 0 -> .
1 . 1 -> .
1 . y -> .
1 . A -> .
1 . T -> 1
1 . 3 -> .
y . . -> .
y . 0 -> .
y . 1 -> .
y . y -> .
y . T -> y
y . 3 -> .
A . . -> .
A . 0 -> .
A . 1 -> .
A . y -> .
A . T -> 1
A . 3 -> .
B . . -> .
B . 0 -> .
B . 1 -> .
B . y -> .
B . A -> .
B . 3 -> .
T . . -> T
T . 0 -> B
T . 1 -> 0
T . y -> B
T . A -> A
T . U -> B
3 . . -> 3
3 . 0 -> 3
3 . 1 -> 3
3 . y -> 3
3 . A -> 3
4 . . -> 3
U . . -> B
V . . -> 3
. 0 . -> 0
. 0 0 -> y
. 0 1 -> y
. 0 y -> 0
. 0 A -> B
. 0 B -> 1
. 0 T -> .
. 0 3 -> 0
0 0 . -> 1
0 0 0 -> A
0 0 1 -> 0
0 0 y -> 1
0 0 A -> y
1 0 . -> B
1 0 1 -> 1
1 0 y -> B
1 0 B -> 1
1 0 T -> .
y 0 . -> A
y 0 1 -> y
y 0 A -> 1
y 0 T -> .
A 0 . -> T
A 0 1 -> A
A 0 y -> y
B 0 . -> y
B 0 0 -> .
B 0 y -> 0
B 0 T -> .
T 0 . -> .
T 0 0 -> .
3 0 . -> 3
. 1 . -> 1
. 1 0 -> B
. 1 1 -> 1
. 1 y -> T
. 1 A -> 1
. 1 B -> A
. 1 T -> .
. 1 3 -> 1
0 1 . -> T
0 1 1 -> .
0 1 T -> .
1 1 . -> 0
1 1 0 -> 0
1 1 1 -> y
1 1 y -> 0
1 1 A -> B
1 1 B -> A
1 1 T -> .
y 1 . -> y
y 1 0 -> A
y 1 1 -> 0
y 1 y -> 1
y 1 A -> y
A 1 . -> A
A 1 0 -> A
A 1 1 -> 0
A 1 y -> A
A 1 A -> B
A 1 B -> y
A 1 T -> 1
B 1 . -> 1
B 1 y -> A
B 1 B -> y
B 1 T -> .
T 1 . -> .
T 1 0 -> B
T 1 y -> .
T 1 A -> .
T 1 B -> .
3 1 . -> 4
. y . -> y
. y 0 -> A
. y 1 -> T
. y y -> y
. y A -> 0
. y B -> B
. y T -> .
. y 3 -> y
0 y . -> A
0 y 0 -> 0
0 y 1 -> T
0 y y -> 0
0 y A -> A
0 y B -> 1
0 y T -> .
0 y U -> A
1 y . -> y
1 y 0 -> 1
1 y 1 -> A
1 y y -> 1
1 y A -> 1
1 y 4 -> y
1 y U -> y
y y . -> y
y y 0 -> 1
y y 1 -> 1
y y y -> B
y y A -> 1
y y B -> A
y y T -> .
y y U -> y
A y . -> A
A y T -> .
A y 4 -> A
A y U -> A
B y . -> 0
B y 0 -> y
B y 1 -> B
B y A -> y
T y . -> .
T y 0 -> B
T y A -> .
T y B -> .
3 y . -> U
. A . -> A
. A 0 -> 1
. A 1 -> 0
. A y -> A
. A A -> 0
. A B -> B
. A T -> .
. A 3 -> A
0 A . -> T
0 A 0 -> 0
0 A y -> y
0 A A -> T
0 A B -> 0
1 A . -> A
1 A 0 -> 0
1 A A -> 1
1 A T -> .
y A . -> 0
y A 1 -> B
y A A -> 1
y A T -> .
y A 4 -> 0
A A . -> T
A A 0 -> 1
A A y -> 0
A A A -> y
A A 4 -> T
B A . -> 1
B A 0 -> A
B A y -> A
T A . -> .
T A y -> B
T A B -> .
3 A . -> V
. B . -> y
. B 0 -> y
. B 1 -> A
. B y -> T
. B A -> y
. B B -> y
. B T -> 1
0 B . -> B
0 B 0 -> y
0 B y -> A
0 B A -> y
0 B U -> y
1 B . -> T
1 B 0 -> 0
1 B y -> A
1 B A -> B
1 B B -> .
1 B U -> 0
y B . -> T
y B 0 -> 1
y B y -> y
y B A -> .
y B U -> 1
A B . -> y
A B 0 -> A
A B 1 -> y
A B y -> A
A B A -> .
A B U -> A
B B . -> A
B B A -> 1
T B . -> .
T B 0 -> .
T B y -> 0
4 B . -> .
U B . -> U
V B . -> 3
. T 0 -> 0
. T 1 -> 1
. T y -> y
. T A -> A
. T B -> B
0 T . -> 0
0 T y -> 3
1 T . -> 1
y T . -> y
A T . -> A
B T . -> B
B T T -> .
T T . -> 0
. 3 . -> 0
. 3 0 -> .
. 3 1 -> .
. 3 y -> .
. 3 A -> .
. 3 U -> .
0 3 . -> .
1 3 . -> .
y 3 . -> .
A 3 . -> .
B 3 . -> .
. 4 . -> 1
. 4 B -> .
. 4 U -> .
y 4 U -> .
A 4 U -> .
. U . -> V
. U U -> U
y U U -> 4
B U U -> y
3 U B -> 4
3 U U -> 3
4 U . -> 4
4 U U -> .
U U . -> U
U U B -> U
U U U -> U
. V . -> A
. V B -> y
0 3 y -> .
0 3 A -> .
0 3 U -> .
3 . U -> 3
0 . 0 -> .
0 . U -> .
B . U -> .
)raw";

inline constexpr std::string_view p_penta_rules = R"raw(-- line-continuation automaton, pentagrid (5 states)
W W W W W W -> W
W R W W W W -> W
W Y W W W W -> W
R Y R W W W -> R
R R R W W W -> R
R R Y G W W -> R
Y G R R W W -> Y
G R G W W W -> R
G G Y W W W -> Y
W G W W W W -> pY
Y Y R R W W -> Y
Y R Y pY pY pY -> Y
R R Y R W W -> R
R R Y pY pY pY -> R
pY R W W W W -> W
pY Y W W W W -> W
pY R pY W W W -> G
pY pY Y W W W -> G
Y G R Y W W -> Y
Y Y R Y W W -> Y
-- blank-stability closure next to the pale-yellow halo
W pY W W W W -> W
W pY pY W W W -> W
W R W W W pY -> W
W Y W W W pY -> W
)raw";

inline constexpr std::string_view p_hepta_rules = R"raw(-- line-continuation automaton, heptagrid (5 states)
W W W W W W W W -> W
W Y W W W W W W -> W
W R W W W W W W -> W
W G W W W W W W -> W
W Y R W W W W W -> W
W R R W W W W W -> W
W G Y W W W W W -> W
R Y R W W W W W -> R
R R Y R W W W W -> R
R R Y G W W W W -> R
Y G R R R W W W -> Y
G R Y W W W W W -> G
W R G W W W W W -> pY
R R Y G pY W W W -> R
W pY W W W W W W -> W
W R pY W W W W W -> W
Y Y R R R W W W -> Y
pY R G W W W W W -> R
G pY R Y W W W W -> Y
W pY G W W W W W -> G
Y G R R Y W W W -> Y
W Y Y W W W W W -> W
R R Y Y R W W W -> R
Y Y R R Y W W W -> Y
)raw";

inline constexpr std::string_view p_dodec_rules = R"raw(-- line-continuation automaton, dodecagrid (6 states)
W W W W W W W W W W W W W -> W
W M W W W W W W W W W W W -> W
W Y W W W W W W W W W W W -> W
W R W W W W W W W W W W W -> W
M R M Y W W W W W W W W W -> M
M R M M W W W W W W W W W -> M
M R G Y M W W W W W W W W -> M
Y R M M G W W W W W W W W -> Y
R M R R W W W W W W W W W -> R
R Y R R W W W W W W W W W -> R
R M R R G W W W W W W W W -> R
R Y G R R W W W W W W W W -> R
W G W W W W W W W W W W W -> pY
G G Y G W W W W W W W W W -> Y
G G G M W W W W W W W W W -> M
G G G R W W W W W W W W W -> R
G G R G W W W W W W W W W -> R
M R M Y M W W W W W W W W -> M
Y R M M Y W W W W W W W W -> M
M R Y M pY pY pY pY pY pY pY pY pY -> M
Y R Y M pY pY pY pY pY pY pY pY pY -> Y
R M R R R W W W W W W W W -> R
R Y R R R W W W W W W W W -> R
R M R R pY pY pY pY pY pY pY pY pY -> R
R Y R R pY pY pY pY pY pY pY pY pY -> R
pY M W W W W W W W W W W W -> W
pY Y W W W W W W W W W W W -> W
pY R W W W W W W W W W W W -> W
pY pY M W W W W W W W W W W -> W
pY pY Y W W W W W W W W W W -> W
pY pY Y pY W W W W W W W W W -> G
pY pY pY M W W W W W W W W W -> G
pY pY pY R W W W W W W W W W -> G
pY pY R pY W W W W W W W W W -> G
W pY pY W W W W W W W W W W -> W
Y R Y M G W W W W W W W W -> Y
Y R Y M Y W W W W W W W W -> Y
)raw";

inline constexpr std::string_view q_penta_rules = R"raw(-- combined 10-state automaton, pentagrid
-- Y matches any line-automaton state, x any of 0 1 y A
W W W W W W -> W
W T W W W W -> W
W Y W W W W -> W
B T T B B W -> B
W T B B B W -> W
W T W B B W -> B
W T W B B Y -> W
W G W W W W -> A
W G B W W W -> A
Y T Y B B Y -> Y
A U W W W W -> W
A U B W W W -> B
A A U W W W -> G
G G U W W W -> U
W A A W W W -> W
B Y W W W W -> B
B Y B W W W -> B
B B Y W W W -> B
U T U A A A -> U
T T 0 B B y -> G
G T W B B W -> 0
W T G B B W -> W
W T W B B G -> W
0 G W B B W -> 0
0 T W B B W -> 0
x G W B B W -> x
W G W B B x -> W
W G x B B W -> W
U G W B B U -> W
B A W W W W -> B
U W W B B G -> W
U W W A A A -> W
W W W B B G -> W
W W W B B W -> W
G W W W W W -> W
A B W W W W -> W
A T A W W W -> G
T B T W W W -> T
T T T W W W -> T
T T Y T W W -> T
T T U A A A -> T
T T U G W W -> T
G T G W W W -> T
T T G T W W -> G
T T W G W W -> T
T G Y T W W -> G
W A G W W W -> W
T T 0 G A A -> T
T T Y G A W -> T
G T Y T W W -> T
T G U G W W -> G
T G U A A A -> W
T T W W W W -> T
W T U G W W -> W
G G W W W W -> W
W W U A A A -> W
A A W W W W -> W
)raw";

inline constexpr std::string_view q_hepta_rules = R"raw(-- combined 10-state automaton, heptagrid
-- Y matches any line-automaton state, x any of 0 1 y A
W W W W W W W W -> W
W T W W W W W W -> W
W Y W W W W W W -> W
B B W T T T W W -> B
W T B B W B W T -> W
Y T Y B W B Y T -> Y
B Y Y W W W W W -> B
B G U W W W W W -> B
W G B W W W W W -> W
W T G W W W W W -> A
W A G W W W W W -> G
W G B W W W W W -> W
W B Y B W W W W -> W
G T U W W W W W -> G
G A T U B W W W -> U
W G U W W W W W -> B
T T 0 B W B y T -> G
0 T W B W B T T -> W
y T T B W B W T -> W
B G W W W W W W -> B
Y T Y B W B Y G -> Y
Y G Y B W B Y T -> Y
U T Y B W B U G -> W
W T Y B W B U G -> W
U G U B W B G T -> W
W T W B W B U W -> W
W T W B W B U W -> W
U T W W B W W G -> W
B U W W W W W W -> B
B G W W W W W W -> B
B W W W W W W W -> B
W T U B W B U W -> W
W T U B W B W W -> W
A G W W W W W W -> W
G A W W B W W W -> W
T B T W W W W W -> T
T T B T W W W W -> T
T T U G W W W W -> T
T T W G T W W W -> G
T T G W T W W W -> T
T T Y Y G W W W -> T
T G Y Y T W W W -> G
G T Y Y T W W W -> T
T G U G A W W W -> W
T U G W W W W W -> W
)raw";

inline constexpr std::string_view q_dodec_rules = R"raw(-- combined 10-state automaton, dodecagrid
-- Y matches any line-automaton state, x any of 0 1 y A
c 0 1 2 3 4 5 6 7 8 9 10 11 -> n
W W W W W W W W W W W W W -> W
W B W W W W W W W W W W W -> W
W Y W W W W W W W W W W W -> W
W T W W W W W W W W W W W -> W
B T B W W W U T T W W W W -> B
B T B W W W W B B W W W W -> B
W T B W W W B B B W W W W -> W
Y T B Y W W Y B B W W W W -> Y
T B T T W W W T T W W W W -> T
T Y T T W W T T T W W W W -> T
U T B G W W U B B W W W W -> U
B T Y B W W G T T W W W W -> B
T B T G W W T T T W W W W -> T
T Y T T W W G T T W W W W -> T
W G W W W W W W W W W W W -> A
G G G W W W U W W W W W W -> U
G G G B W W W W W W W W W -> B
G G G T W W W W W W W W W -> T
G G G W W W T W W W W W W -> T
B T Y B W W B T T W W W W -> B
Y T B Y W W Y B B W W W W -> Y
B T Y B A A A A A A A A A -> B
Y T B A A A Y A A A A A A -> Y
T B T T W W T T T W W W W -> T
T Y T T W W T T T W W W W -> T
T B T T A A A A A A A A A -> T
T Y T A A A T A A A A A A -> T
A B W W W W W W W W W W W -> W
A Y W W W W W W W W W W W -> W
A T W W W W W W W W W W W -> W
A B T A W W W W W W W W W -> T
A B A W W W W W W W W W W -> T
c 0 1 2 3 4 5 6 7 8 9 10 11 -> n
A Y A B W W W W W W W W W -> B
A Y A W W W W W W W W W W -> B
A T A B W W W W W W W W W -> T
A T A W W W W W W W W W W -> T
A T B A W W W W W W W W W -> T
A A Y A W W W W W W W W W -> G
A A A B W W W W W W W W W -> G
A A A T W W W W W W W W W -> G
A A T A W W W W W W W W W -> G
W A A W W W W W W W W W W -> W
W B B W W W W W W W W W W -> W
W T T W W W W W W W W W W -> W
T T B y W W 0 B B W W W W -> G
y T B W W W T B B W W W W -> Y
0 T B T W W W B B W W W W -> Y
G T B W W W W B B W W W W -> 0
W T B W W W G B B W W W W -> W
W T B G W W W B B W W W W -> W
B T G B W W B T T W W W W -> G
G T 0 B W W B T T W W W W -> B
B T Y B W W G T T W W W W -> B
B T Y G W W B T T W W W W -> G
x T G W W W W B B W W W W -> x
U T G U W W W B B W W W W -> W
B T U G A A A A A A A A A -> W
G G G W W W W W W W W W W -> W
U T W W W W G B B W W W W -> W
U T U W W W W B B W W W W -> W
U T W A A A W A A A A A A -> W
W T W W W W W B B W W W W -> W
G G W W W W W W W W W W W -> W
G W G W W W T W W W W W W -> W
G W W T W W W W W W W W W -> W
)raw";

inline constexpr std::string_view dodec_adjacency = R"raw(-- cyclically ordered neighbor faces of each dodecahedron face
-- (counterclockwise seen from outside)
1 2 3 4 5
7 2 0 5 6
8 3 0 1 7
9 4 0 2 8
10 5 0 3 9
6 1 0 4 10
10 11 7 1 5
11 8 2 1 6
11 9 3 2 7
10 4 3 8 11
5 4 9 11 6
6 10 9 8 7
)raw";

inline constexpr std::string_view minsky_tm = R"raw(-- seven-state four-letter universal machine
states: 1 2 3 4 5 6 7
symbols: 0 1 y A blank=0
1 0 -> L 0 1
1 1 -> L 1 2
1 y -> L 0 1
1 A -> L 1 1
2 0 -> R y 2
2 1 -> R A 2
2 y -> L 0 1
2 A -> R y 6
3 0 -> HALT
3 1 -> L A 3
3 y -> L y 3
3 A -> L 1 4
4 0 -> R y 5
4 1 -> L 1 7
4 y -> L y 4
4 A -> L 1 4
5 0 -> L y 3
5 1 -> R A 5
5 y -> R y 5
5 A -> R 1 5
6 0 -> L A 3
6 1 -> R A 6
6 y -> R y 6
6 A -> R 1 6
7 0 -> R y 6
7 1 -> R 1 7
7 y -> R 0 7
7 A -> R 0 2
)raw";

inline constexpr std::string_view golden_collisions = R"raw(-- collision space-time blocks, one per impulsion/symbol pair
-- block header: 'block <impulsion> <symbol>'
block 0T 0
. 0 T . 0 .
. . 0 B 0 .
. . 1 y y .
. . T 1 y .
. T 1 . y .
end
block 0T 1
. 0 T . 1 . .
. . 0 0 1 . .
. . y 0 T . .
. . A . 0 T .
end
block 0T y
. 0 T . y . . .
. . 0 B y . . .
. . 1 A 0 . . .
. . 1 0 T . . .
. . B . 0 T . .
. . y . . 0 T .
end
block 0T A
. 0 T . A . .
. . 0 A A . .
. . B T T . .
. . 1 . 0 T .
end
block 1T 0
. . 1 T . 0 .
. . . 1 B 0 .
. . . A 0 y .
. . . 1 y A .
. . . T 1 0 .
. . T 1 B B .
. T 1 . . A .
end
block 1T 1
. 1 T . 1 . .
. . 1 0 1 . .
. . B 1 T . .
. . A . 1 T .
end
block 1T y
. 1 T . y . .
. . 1 B y . .
. . A A 0 . .
. . 0 1 T . .
. . y . 1 T .
end
block 1T A
. 1 T . A . .
. . 1 A A . .
. . 1 1 T . .
. . 1 . 1 T .
end
block yT 0
. y T . 0 . .
. . y B 0 . .
. . B 1 y . .
. . A A y . .
. . 0 0 A . .
. . y y T . .
. . y . y T .
end
block yT 1
. y T . 1 . .
. . y 0 1 . .
. . A y T . .
. . A . y T .
end
block yT y
. y T . y .
. . y B y .
. . B y 0 .
. . T y A .
. T y . 0 .
end
block yT A
. y T . A . . .
. . y A A . . .
. . 0 1 T . . .
. . y . 1 T . .
end
block AT 0
. A T . 0 . .
. . A B 0 . .
. . B A y . .
. . y A A . .
. . 0 1 T . .
. . y . 1 T .
end
block AT 1
. A T . 1 . .
. . A 0 1 . .
. . 1 A T . .
. . 1 . A T .
. . 1 . . A T
. . 1 . . . A
end
block AT y
. A T . y . .
. . A B y . .
. . B A 0 . .
. . y A T . .
. . 0 . A T .
end
block AT A
. A T . A . .
. . A A A . .
. . 0 y T . .
. . 0 . y T .
end
block T0 0
. 0 . T 0 .
. 0 y 0 . .
. 0 0 A . .
. y y T . .
. y . y T .
end
block T0 1
. 1 . T 0 .
. 1 1 0 . .
. 1 0 B . .
. B 1 B . .
. A y T . .
. A . y T .
end
block T0 y
. . y . T 0 .
. . y y 0 . .
. . y 1 A . .
. . T y A . .
. T y . 0 . .
end
block T0 A
. A . T 0 . .
. A 1 0 . . .
. 0 A B . . .
. B 0 y . . .
. y 0 A . . .
. A 1 T . . .
. 0 1 1 T . .
. y . . 1 T .
end
block T1 0
. 0 . T 1 .
. 0 y 1 . .
. 0 T y . .
. . 0 . . .
end
block T1 1
. . 1 . T 1 .
. . 1 1 1 . .
. . 1 y 0 . .
. . T 1 A . .
. T 1 . A . .
end
block T1 y
. . y . T 1 .
. . y y 1 . .
. . y 1 y . .
. . T 1 y . .
. T 1 . y . .
end
block T1 A
. . . A . T 1 .
. . . A 1 1 . .
. . . 0 0 0 . .
. . . y A 1 . .
. . . 0 B A . .
. . . 1 y 1 . .
. . . T A y . .
. . T A B A . .
. T A . . 1 . .
end
block Ty 0
. . 0 . T y .
. . 0 y y . .
. . 0 0 y . .
. . y 1 A . .
. . T y A . .
. T y . 0 . .
end
block Ty 1
. . 1 . T y .
. . 1 1 y . .
. . 1 0 y . .
. . B B A . .
. . y 1 1 . .
. . T 0 0 . .
. T 0 . 1 . .
end
block Ty y
. . y . T y .
. . y y y . .
. . y B y . .
. . B y 0 . .
. . T y A . .
. T y . 0 . .
end
block Ty A
. . . A . T y .
. . . A 1 y . .
. . . 0 A y . .
. . . B y A . .
. . . T y 0 . .
. . T y B A . .
. T y . . 1 . .
end
block TA 0
. 0 . T A .
. 0 y A . .
. 0 A 0 . .
. B 0 T . .
. y . 0 T .
    . . 0 T
. . . y . .
. . . y . .
end
block TA 1
. . . 1 . T A .
. . . 1 1 A . .
. . . 1 B A . .
. . . A B 1 . .
. . . B y 1 . .
. . . T B y . .
. . T B 0 0 . .
. T B . . 1 . .
end
block TA y
. . . y . T A .
. . . y y A . .
. . . y 1 0 . .
. . . T A B . .
. . T A . y . .
              .
T A . . . y . .
A . . . . y . .
end
block TA A
. . . A . T A .
. . . A 1 A . .
. . . 0 B A . .
. . . 1 y 1 . .
. . . T A y . .
. . T A B A . .
. T A . . 1 . .
end
block TB 0
. 0 . T B .
. 0 y B . .
. 0 1 T . .
. y . 1 T .
end
block TB 1
. 1 . T B .
. 1 1 B . .
. 1 A T . .
. 1 . A T .
end
block TB y
. y . T B .
. y y B . .
. y A T . .
. 0 . A T .
end
block TB A
. A . T B .
. A 1 B . .
. 0 y T . .
. 0 . y T .
end
)raw";

inline constexpr std::string_view golden_uzone = R"raw(-- collisions of right impulsions with the growth zone
block yT U
. y T . U U U . . . .
. . y B U U U B . . .
. . B 1 y U U U . . .
. . A A y 4 U U B . .
. . 0 0 A . . U U . .
. . y y T . . U U B .
. . y . y T . U U U .
. . y . . y B U U U B
end
block 0T U
. 0 T . U U U . . .
. . 0 B U U U B . .
. . 1 y y U U U . .
. . T 1 y 4 U U B .
. T 1 . y . . U U .
end
block 1T U
. . 1 T . U U U . . .
. . . 1 B U U U B . .
. . . A 0 y U U U . .
. . . 1 y A 4 U U B .
. . . T 1 0 . . U U .
. . T 1 B B . . U U B
. T 1 . . A . . U U U
end
block AT U
. A T . U U U . . . .
. . A B U U U B . . .
. . B A y U U U . . .
. . y A A 4 U U B . .
. . 0 1 T . . U U . .
. . y . 1 T . U U B .
. . y . . 1 B U U U .
end
)raw";

inline constexpr std::string_view golden_signal_cross = R"raw(-- stopping signal crossing the final tagged word (two panels;
-- first row of panel 2 repeats last row of panel 1)
-- context: 0 @ -1
panel
3 . y . . y . . A . . 0 . . 1 . .
. 3 y . . y . . A . . 0 . . 1 . .
. . U . . y . . A . . 0 . . 1 . .
. . V B . y . . A . . 0 . . 1 . .
. . y 3 . y . . A . . 0 . . 1 . .
. . y . 3 y . . A . . 0 . . 1 . .
. . y . . U . . A . . 0 . . 1 . .
. . y . . V B . A . . 0 . . 1 . .
. . y . . y 3 . A . . 0 . . 1 . .
. . y . . y . 3 A . . 0 . . 1 . .
end
panel
. . y . . y . 3 A . . 0 . . 1 . .
. . y . . y . . V . . 0 . . 1 . .
. . y . . y . . A 3 . 0 . . 1 . .
. . y . . y . . A . 3 0 . . 1 . .
. . y . . y . . A . . 3 . . 1 . .
. . y . . y . . A . . 0 3 . 1 . .
. . y . . y . . A . . 0 . 3 1 . .
. . y . . y . . A . . 0 . . 4 . .
. . y . . y . . A . . 0 . . 1 3 .
. . y . . y . . A . . 0 . . 1 . 3
end
)raw";

inline constexpr std::string_view golden_signal_end = R"raw(-- stopping signal erasing the growth zone
panel
. 3 U U U U . . . . .
. . 3 U U U B . . . .
. . . 3 U U U . . . .
. . . . 3 U U B . . .
. . . . . 3 U U . . .
. . . . . . 3 U B . .
. . . . . . . 4 U . .
. . . . . . . . 4 B .
. . . . . . . . . . .
end
)raw";

inline constexpr std::string_view golden_background = R"raw(-- free growth of the background zone
panel
. . U U . . . . . .
. . U U B . . . . .
. . U U U . . . . .
. . U U U B . . . .
. . U U U U . . . .
. . U U U U B . . .
. . U U U U U . . .
end
)raw";

inline constexpr std::string_view golden_collision_specs = R"raw(-- start/final shapes of each collision (macro level)
-- kind args: RR/RL a b c d etc; LS/RS a b c (dissolving halt)
right RR y 0 y y
right RR y 1 A y
right RL y y y 0
right RR y A y 1
right RL 0 0 1 y
right RR 0 1 A 0
right RR 0 y y 0
right RR 0 A 1 0
right RL 1 0 1 A
right RR 1 1 A 1
right RR 1 y y 1
right RR 1 A 1 1
right RR A 0 y 1
right RR A 1 1 A
right RR A y 0 A
right RR A A 0 y
left LL 0 y y 0
left LL 1 y 0 1
left LL y y y 0
left LL A y y 1
left LR 0 0 y y
left LR 1 0 A y
left LL y 0 y 0
left LR A 0 y 1
left LS 0 1 0
left LL 1 1 1 A
left LL y 1 1 y
left LL A 1 A 1
left LR 0 A y 0
left LL 1 A B 1
left LL y A A y
left LL A A A 1
left LR 0 B y 1
left LR 1 B 1 A
left LR y B 0 A
left LR A B 0 y
)raw";

}  // namespace strongca::data
