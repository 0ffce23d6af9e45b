#pragma once

#include <string>
#include <vector>

#include "loopsmith/group.hpp"

namespace loopsmith {
namespace presets {

inline FiniteGroup trivial() {
  return validate_group({{0}}, {"1"});
}

inline FiniteGroup cyclic(int n) {
  if (n < 1) throw UnknownPreset("cyclic order must be positive");
  if (n > kClosureBound)
    throw ClosureBoundExceeded("preset order exceeds " +
                               std::to_string(kClosureBound));
  Table t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  std::vector<std::string> names(n);
  names[0] = "1";
  for (int i = 1; i < n; ++i)
    names[i] = i == 1 ? "a" : "a^" + std::to_string(i);
  return validate_group(std::move(t), std::move(names));
}

// Order 2n: indices 0..n-1 are rotations r^a, n..2n-1 are reflections r^a s.
inline FiniteGroup dihedral(int n) {
  if (n < 1) throw UnknownPreset("dihedral parameter must be positive");
  if (2 * n > kClosureBound)
    throw ClosureBoundExceeded("preset order exceeds " +
                               std::to_string(kClosureBound));
  const int N = 2 * n;
  Table t(N, std::vector<int>(N));
  for (int a1 = 0; a1 < n; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int a2 = 0; a2 < n; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) {
          const int a = ((b1 == 0 ? a1 + a2 : a1 - a2) % n + n) % n;
          t[a1 + n * b1][a2 + n * b2] = a + n * (b1 ^ b2);
        }
  std::vector<std::string> names(N);
  for (int a = 0; a < n; ++a) {
    const std::string ra =
        a == 0 ? "" : (a == 1 ? "r" : "r^" + std::to_string(a));
    names[a] = a == 0 ? "1" : ra;
    names[n + a] = ra + "s";
  }
  return validate_group(std::move(t), std::move(names));
}

inline FiniteGroup s3() {
  FiniteGroup g = dihedral(3);
  return g;
}

inline FiniteGroup klein() {
  Table t(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = i ^ j;
  return validate_group(std::move(t), {"1", "x", "y", "xy"});
}

// Quaternion group: 0..3 are 1,i,j,k and 4..7 their negatives.
inline FiniteGroup q8() {
  auto symprod = [](int t1, int t2, int& sign) {
    sign = 0;
    if (t1 == 0) return t2;
    if (t2 == 0) return t1;
    if (t1 == t2) {
      sign = 1;
      return 0;
    }
    const bool forward = (t1 == 1 && t2 == 2) || (t1 == 2 && t2 == 3) ||
                         (t1 == 3 && t2 == 1);
    sign = forward ? 0 : 1;
    return 6 - t1 - t2;
  };
  Table t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int sign = 0;
      const int sym = symprod(x % 4, y % 4, sign);
      const int s = (x / 4) ^ (y / 4) ^ sign;
      t[x][y] = sym + 4 * s;
    }
  return validate_group(std::move(t),
                        {"1", "i", "j", "k", "-1", "-i", "-j", "-k"});
}

// <a,b | a^4 = b^3 = 1, a^-1 b a = b^-1>, elements a^i b^j at index 3i + j.
inline FiniteGroup c4_semidirect_c3() {
  Table t(12, std::vector<int>(12));
  for (int i1 = 0; i1 < 4; ++i1)
    for (int j1 = 0; j1 < 3; ++j1)
      for (int i2 = 0; i2 < 4; ++i2)
        for (int j2 = 0; j2 < 3; ++j2) {
          const int i = (i1 + i2) % 4;
          const int j = (((i2 % 2 == 0 ? j1 : -j1) + j2) % 3 + 3) % 3;
          t[3 * i1 + j1][3 * i2 + j2] = 3 * i + j;
        }
  std::vector<std::string> names(12);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 3; ++j) {
      std::string nm;
      if (i == 1) nm += "a";
      if (i > 1) nm += "a^" + std::to_string(i);
      if (j == 1) nm += "b";
      if (j > 1) nm += "b^" + std::to_string(j);
      names[3 * i + j] = nm.empty() ? "1" : nm;
    }
  return validate_group(std::move(t), std::move(names));
}

// C2^k with bitmask indices; the product is xor.
inline FiniteGroup elementary_abelian(int k) {
  if (k < 0) throw UnknownPreset("elementary_abelian parameter must be >= 0");
  if (k > 9)
    throw ClosureBoundExceeded("preset order exceeds " +
                               std::to_string(kClosureBound));
  const int n = 1 << k;
  Table t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = i ^ j;
  std::vector<std::string> names(n);
  for (int m = 0; m < n; ++m) {
    std::string nm;
    for (int b = 0; b < k; ++b)
      if (m >> b & 1) nm += "x" + std::to_string(b + 1);
    names[m] = nm.empty() ? "1" : nm;
  }
  return validate_group(std::move(t), std::move(names));
}

}  // namespace presets

// Parses "trivial", "klein", "q8", "s3", "c4_semidirect_c3", "cyclic(n)",
// "dihedral(n)", "elementary_abelian(k)".
inline FiniteGroup preset(const std::string& name) {
  if (name == "trivial") return presets::trivial();
  if (name == "klein") return presets::klein();
  if (name == "q8") return presets::q8();
  if (name == "s3") return presets::s3();
  if (name == "c4_semidirect_c3") return presets::c4_semidirect_c3();
  const auto open = name.find('(');
  if (open != std::string::npos && name.back() == ')') {
    const std::string head = name.substr(0, open);
    const std::string arg = name.substr(open + 1, name.size() - open - 2);
    int k = -1;
    try {
      std::size_t used = 0;
      k = std::stoi(arg, &used);
      if (used != arg.size()) k = -1;
    } catch (const std::exception&) {
      k = -1;
    }
    if (k >= 0) {
      if (head == "cyclic") return presets::cyclic(k);
      if (head == "dihedral") return presets::dihedral(k);
      if (head == "elementary_abelian") return presets::elementary_abelian(k);
    }
  }
  throw UnknownPreset("unknown preset: " + name);
}

}  // namespace loopsmith
