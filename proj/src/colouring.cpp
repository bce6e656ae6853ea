#include "rbl/colouring.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <unistd.h>

#include "rbl/errors.hpp"

namespace rbl {

const char* colour_name(Colour c) { return c == Colour::Red ? "red" : "blue"; }

Colour parse_colour(const std::string& s) {
  if (s == "red") return Colour::Red;
  if (s == "blue") return Colour::Blue;
  throw InvalidInput("colour must be red or blue, got '" + s + "'");
}

Colouring::Colouring(std::size_t n) : n_(n) {
  red_.assign(n, VertexSet(n));
  blue_.reserve(n);
  for (std::size_t u = 0; u < n; ++u) {
    VertexSet b = VertexSet::full(n);
    b.erase(static_cast<Vertex>(u));
    blue_.push_back(std::move(b));
  }
}

void Colouring::set(Vertex u, Vertex v, Colour c) {
  if (u == v || u >= n_ || v >= n_) throw ContractViolation("bad edge");
  if (c == Colour::Red) {
    red_[u].insert(v), red_[v].insert(u);
    blue_[u].erase(v), blue_[v].erase(u);
  } else {
    blue_[u].insert(v), blue_[v].insert(u);
    red_[u].erase(v), red_[v].erase(u);
  }
}

Colouring random_colouring(std::size_t n, const Rational& red_prob, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  if (red_prob < 0 || red_prob > 1) throw InvalidInput("red_prob outside [0,1]");
  Colouring c(n);
  bool always = red_prob == 1;
  std::uint64_t threshold = 0;
  if (!always) {
    BigInt t = boost::multiprecision::numerator(red_prob) * (BigInt(1) << 64) /
               boost::multiprecision::denominator(red_prob);
    threshold = t.convert_to<std::uint64_t>();
  }
  std::mt19937_64 gen(seed);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      std::uint64_t draw = gen();
      if (always || draw < threshold) c.set(u, v, Colour::Red);
    }
  return c;
}

namespace {

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

}  // namespace

Colouring paley_colouring(std::uint64_t q) {
  if (!is_prime(q) || q % 4 != 1) throw InvalidInput("Paley modulus must be a prime = 1 mod 4");
  if (q > 100000) throw InvalidInput("Paley modulus too large");
  std::vector<bool> qr(q, false);
  for (std::uint64_t x = 1; x < q; ++x) qr[x * x % q] = true;
  Colouring c(q);
  for (Vertex u = 0; u < q; ++u)
    for (Vertex v = u + 1; v < q; ++v)
      if (qr[(v - u) % q]) c.set(u, v, Colour::Red);
  return c;
}

std::uint64_t red_edges(const Colouring& c, const VertexSet& X, const VertexSet& Y) {
  std::uint64_t e = 0;
  X.for_each([&](Vertex x) { e += VertexSet::intersect_count(c.red(x), Y); });
  return e;
}

Rational red_density(const Colouring& c, const VertexSet& X, const VertexSet& Y) {
  if (X.empty() || Y.empty()) throw UndefinedDensity("density of an empty pair is undefined");
  if (!X.disjoint(Y)) throw ContractViolation("X and Y overlap");
  return Rational(BigInt(red_edges(c, X, Y)), BigInt(X.size()) * Y.size());
}

Rational blue_density(const Colouring& c, const VertexSet& X, const VertexSet& Y) {
  return Rational(1) - red_density(c, X, Y);
}

std::string to_rbc1(const Colouring& c) {
  std::string out = "RBC1 " + std::to_string(c.n()) + "\n";
  for (Vertex i = 1; i < c.n(); ++i) {
    for (Vertex j = 0; j < i; ++j) out += c.is_red(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

Colouring from_rbc1(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing header");
  if (line.rfind("RBC1 ", 0) != 0) throw ParseError(1, "header must be 'RBC1 <n>'");
  std::string ns = line.substr(5);
  if (ns.empty() || ns.size() > 9 || ns.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(1, "bad vertex count '" + ns + "'");
  std::size_t n = std::stoul(ns);
  if (n < 1) throw ParseError(1, "vertex count must be at least 1");
  Colouring c(n);
  for (Vertex i = 1; i < n; ++i) {
    std::size_t lineno = i + 1;
    if (!std::getline(in, line))
      throw ParseError(lineno, "expected row for vertex " + std::to_string(i) + ", got end of file");
    if (line.size() != i)
      throw ParseError(lineno, "row for vertex " + std::to_string(i) + " must have " +
                                   std::to_string(i) + " characters, got " +
                                   std::to_string(line.size()));
    for (Vertex j = 0; j < i; ++j) {
      if (line[j] == '1')
        c.set(i, j, Colour::Red);
      else if (line[j] != '0')
        throw ParseError(lineno, "non-binary character at column " + std::to_string(j + 1));
    }
  }
  while (std::getline(in, line))
    if (!line.empty()) throw ParseError(n + 1, "trailing data after last row");
  return c;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp + " for writing");
    out << content;
    if (!out) {
      out.close();
      std::remove(tmp.c_str());
      throw Error("write to " + tmp + " failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    throw Error("cannot rename " + tmp + " to " + path + ": " + ec.message());
  }
}

void save(const Colouring& c, const std::string& path) { write_file_atomic(path, to_rbc1(c)); }

Colouring load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_rbc1(ss.str());
}

}  // namespace rbl
