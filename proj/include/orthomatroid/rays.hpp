// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "orthomatroid/error.hpp"
#include "orthomatroid/orthoset.hpp"

namespace orthomatroid {

using Integer = boost::multiprecision::cpp_int;

/// a + bi with arbitrary-precision parts.
struct Gaussian {
  Integer re;
  Integer im;

  Gaussian() = default;
  Gaussian(Integer r, Integer i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT
  Gaussian(int r) : re(r), im(0) {}  // NOLINT

  bool is_zero() const { return re == 0 && im == 0; }
  Gaussian conj() const { return {re, -im}; }
  Integer norm() const { return re * re + im * im; }

  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const Gaussian&, const Gaussian&) = default;

  /// "3", "-2i", "1+2i", "1-i"
  std::string to_string() const {
    if (im == 0) return re.str();
    auto imag = [](const Integer& v) -> std::string {
      if (v == 1) return "i";
      if (v == -1) return "-i";
      return v.str() + "i";
    };
    if (re == 0) return imag(im);
    std::string s = re.str();
    if (im > 0) s += '+';
    return s + imag(im);
  }
};

namespace detail {

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Nearest integer to a / d for d > 0.
inline Integer round_div(const Integer& a, const Integer& d) {
  return floor_div(2 * a + d, 2 * d);
}

/// Remainder of a by b in the Euclidean domain Z[i].
inline Gaussian gaussian_mod(const Gaussian& a, const Gaussian& b) {
  const Gaussian num = a * b.conj();
  const Integer d = b.norm();
  const Gaussian q{round_div(num.re, d), round_div(num.im, d)};
  return a - q * b;
}

inline Gaussian gaussian_gcd(Gaussian a, Gaussian b) {
  while (!b.is_zero()) {
    Gaussian r = gaussian_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// a / b, which must be exact.
inline Gaussian exact_div(const Gaussian& a, const Gaussian& b) {
  const Gaussian num = a * b.conj();
  const Integer d = b.norm();
  return {num.re / d, num.im / d};
}

}  // namespace detail

enum class FormKind { Euclidean, Hermitian };

/// A diagonal form Σ s_k x_k y_k* with s_k = +1, except for the last
/// `negative_terms` coordinates where s_k = -1. Euclidean forms use the
/// identity involution on integers, Hermitian forms conjugation on Z[i].
/// With negative terms the form is indefinite and rays can be isotropic.
struct FormSpec {
  FormKind kind = FormKind::Euclidean;
  std::size_t dimension = 1;
  std::size_t negative_terms = 0;
};

/// A projective ray in canonical form: coordinates with no common factor
/// and the first nonzero coordinate normalized by a unit (positive for
/// integers; real part > 0 and imaginary part >= 0 for Gaussian integers).
struct Ray {
  std::vector<Gaussian> coordinates;
  bool canonical = false;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coordinates.size(); ++i) {
      if (i) s += ',';
      s += coordinates[i].to_string();
    }
    return s + ")";
  }

  friend bool operator==(const Ray& a, const Ray& b) { return a.coordinates == b.coordinates; }
};

inline Ray canonical_ray(std::vector<Gaussian> v, FormKind kind) {
  Gaussian g;
  for (const auto& c : v) {
    g = kind == FormKind::Euclidean
            ? Gaussian(boost::multiprecision::gcd(g.re, abs(c.re)))
            : detail::gaussian_gcd(g, c);
  }
  if (g.is_zero()) throw Error(ErrorCode::ZeroVector, "a ray needs a nonzero vector");
  for (auto& c : v) c = detail::exact_div(c, g);
  const auto lead = std::find_if(v.begin(), v.end(), [](const Gaussian& c) { return !c.is_zero(); });
  Gaussian unit{1, 0};
  if (kind == FormKind::Euclidean) {
    if (lead->re < 0) unit = Gaussian{-1, 0};
  } else {
    Gaussian z = *lead;
    const Gaussian i{0, 1};
    while (!(z.re > 0 && z.im >= 0)) {
      z = z * i;
      unit = unit * i;
    }
  }
  for (auto& c : v) c = c * unit;
  return Ray{std::move(v), true};
}

/// ⟨x|y⟩ = Σ s_k x_k y_k*
inline Gaussian inner_product(const std::vector<Gaussian>& x, const std::vector<Gaussian>& y,
                              const FormSpec& form) {
  Gaussian sum;
  const std::size_t first_negative = form.dimension - std::min(form.negative_terms, form.dimension);
  for (std::size_t k = 0; k < x.size(); ++k) {
    const Gaussian term = x[k] * (form.kind == FormKind::Hermitian ? y[k].conj() : y[k]);
    sum = k < first_negative ? sum + term : sum - term;
  }
  return sum;
}

struct RaySystem {
  Orthoset orthoset;
  std::vector<Ray> rays;
  /// Input vectors skipped because they were isotropic (with drop_isotropic).
  std::size_t dropped_isotropic = 0;
};

/// Canonicalizes, deduplicates (first occurrence wins) and relates rays by
/// ⟨x|y⟩ = 0. Isotropic rays are an error unless `drop_isotropic`.
inline RaySystem from_rays(const std::vector<std::vector<Gaussian>>& vectors,
                           const FormSpec& form, bool drop_isotropic = false) {
  if (form.dimension == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
  if (form.negative_terms > form.dimension) {
    throw Error(ErrorCode::InvalidArgument, "more negative terms than coordinates");
  }
  RaySystem out;
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const auto& v = vectors[i];
    if (v.size() != form.dimension) {
      throw Error(ErrorCode::DimensionMismatch,
                  "vector " + std::to_string(i) + " has " + std::to_string(v.size()) +
                      " coordinates, expected " + std::to_string(form.dimension));
    }
    if (form.kind == FormKind::Euclidean) {
      for (const auto& c : v) {
        if (c.im != 0) {
          throw Error(ErrorCode::InvalidArgument,
                      "Gaussian coordinate " + c.to_string() + " under a Euclidean form");
        }
      }
    }
    Ray ray = canonical_ray(v, form.kind);
    if (inner_product(ray.coordinates, ray.coordinates, form).is_zero()) {
      if (drop_isotropic) {
        ++out.dropped_isotropic;
        continue;
      }
      throw Error(ErrorCode::IsotropicRay, ray.to_string() + " is orthogonal to itself");
    }
    if (seen.emplace(ray.to_string(), out.rays.size()).second) out.rays.push_back(std::move(ray));
  }
  std::vector<ElementPair> pairs;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < out.rays.size(); ++a) {
    labels.push_back(out.rays[a].to_string());
    for (std::size_t b = a + 1; b < out.rays.size(); ++b) {
      const bool ab = inner_product(out.rays[a].coordinates, out.rays[b].coordinates, form).is_zero();
      const bool ba = inner_product(out.rays[b].coordinates, out.rays[a].coordinates, form).is_zero();
      if (ab != ba) {
        throw Error(ErrorCode::Internal, "orthogonality of " + labels.back() + " is not symmetric");
      }
      if (ab) pairs.emplace_back(a, b);
    }
  }
  out.orthoset = Orthoset::create(out.rays.size(), pairs, std::move(labels));
  return out;
}

namespace detail {

inline bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

inline Integer parse_signed(std::string_view s, const std::string& token) {
  std::string_view digits = s;
  bool negative = false;
  if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
    negative = digits[0] == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) throw Error(ErrorCode::ParseError, "bad number '" + token + "'");
  const Integer v{std::string(digits)};
  return negative ? Integer(-v) : v;
}

/// Imaginary coefficient text before the 'i': "", "+", "-" or a signed integer.
inline Integer parse_imaginary(std::string_view s, const std::string& token) {
  if (s.empty() || s == "+") return 1;
  if (s == "-") return -1;
  return parse_signed(s, token);
}

}  // namespace detail

/// "7", "-3", "2i", "-i", "1+2i", "3-i"
inline Gaussian parse_gaussian(const std::string& token) {
  std::string_view s = token;
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty coordinate");
  if (s.back() != 'i') return Gaussian(detail::parse_signed(s, token));
  s.remove_suffix(1);
  const auto split = s.find_last_of("+-");
  if (split == std::string_view::npos || split == 0) {
    return Gaussian(0, detail::parse_imaginary(s, token));
  }
  return Gaussian(detail::parse_signed(s.substr(0, split), token),
                  detail::parse_imaginary(s.substr(split), token));
}

/// One vector per line, whitespace-separated coordinates. Blank lines and
/// lines starting with '#' are skipped.
inline std::vector<std::vector<Gaussian>> parse_ray_file(std::istream& in) {
  std::vector<std::vector<Gaussian>> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    std::vector<Gaussian> v;
    std::string token;
    while (fields >> token) v.push_back(parse_gaussian(token));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace orthomatroid
