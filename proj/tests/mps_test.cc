// Copyright 2026 The fohorse Authors
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

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fohorse/mps.h"
#include "fohorse/oracle.h"
#include "fohorse/status.h"
#include "test_util.h"

namespace fohorse {
namespace {

using testing::kInf;

const std::string kDataDir = FOHORSE_TEST_DATA_DIR;

template <typename F>
Error ErrorOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  FAIL("no error thrown");
  return Error(ErrorCode::kInvalidArgument, "unreachable");
}

void CheckSameProblem(const LpProblem& a, const LpProblem& b) {
  CHECK(a.objective == b.objective);
  CHECK(a.objective_constant == b.objective_constant);
  CHECK(a.eq_matrix == b.eq_matrix);
  CHECK(a.eq_rhs == b.eq_rhs);
  CHECK(a.ineq_matrix == b.ineq_matrix);
  CHECK(a.ineq_rhs == b.ineq_rhs);
  CHECK(a.lower == b.lower);
  CHECK(a.upper == b.upper);
}

// Wraps ROWS/COLUMNS/... body lines into a free-format file.
std::string Mps(const std::string& body) { return "NAME T\n" + body + "ENDATA\n"; }

TEST_CASE("first toy LP fixture file") {
  const MpsParseResult r = read_mps_file(kDataDir + "/toy_a.mps");
  CheckSameProblem(r.problem, testing::ToyA());
  CHECK(r.problem.name == "TOYA");
  CHECK_FALSE(r.maximize);
  CHECK_FALSE(r.relaxed_integrality);
  CHECK(r.warnings.empty());
}

TEST_CASE("second toy LP fixture file uses LO and FR") {
  CheckSameProblem(read_mps_file(kDataDir + "/toy_b.mps").problem, testing::ToyB());
}

TEST_CASE("fixed format allows spaces in names") {
  const MpsParseResult r = read_mps_file(kDataDir + "/fixed/toy_a_fixed.mps", MpsDialect::kFixed);
  LpProblem expected = testing::ToyA();
  expected.upper[1] = 10.0;
  CheckSameProblem(r.problem, expected);
  CHECK(r.problem.name == "TOYA FIXED");
  // The free reader splits "X 1" into two tokens.
  CHECK(ErrorOf([] {
          read_mps_file(kDataDir + "/fixed/toy_a_fixed.mps", MpsDialect::kFree);
        }).code() == ErrorCode::kSyntaxError);
}

TEST_CASE("L rows become negated G rows") {
  const MpsParseResult r = parse_mps(Mps(
      "ROWS\n N obj\n L cap\nCOLUMNS\n x1 obj 1 cap 1\n x2 obj 1\nRHS\n rhs cap 5\n"));
  CHECK(r.problem.ineq_matrix.to_dense() == std::vector{-1.0, 0.0});
  CHECK(r.problem.ineq_rhs == Vector{-5.0});
  CHECK(r.problem.num_eq_rows() == 0);
}

TEST_CASE("MI then UP bounds") {
  const MpsParseResult r = parse_mps(Mps(
      "ROWS\n N obj\n G r\nCOLUMNS\n x1 obj 1 r 1\nBOUNDS\n MI bnd x1\n UP bnd x1 2\n"));
  CHECK(r.problem.lower == Vector{-kInf});
  CHECK(r.problem.upper == Vector{2.0});
  CHECK(r.warnings.empty());
}

TEST_CASE("negative UP with a default lower bound frees the lower bound") {
  const MpsParseResult r =
      parse_mps(Mps("ROWS\n N obj\nCOLUMNS\n x1 obj 1\nBOUNDS\n UP bnd x1 -2\n"));
  CHECK(r.problem.lower == Vector{-kInf});
  CHECK(r.problem.upper == Vector{-2.0});
  CHECK(r.warnings.size() == 1);
}

TEST_CASE("remaining bound types") {
  const MpsParseResult r = parse_mps(Mps(
      "ROWS\n N obj\nCOLUMNS\n a obj 1\n b obj 1\n c obj 1\n d obj 1\n e obj 1\n"
      "BOUNDS\n FX bnd a 3\n FR bnd b\n PL bnd c\n LO bnd d -1e30\n UP bnd e 1e30\n"
      " LO bnd c 1.5\n"));
  CHECK(r.problem.lower == Vector{3.0, -kInf, 1.5, -kInf, 0.0});
  CHECK(r.problem.upper == Vector{3.0, kInf, kInf, kInf, kInf});
}

TEST_CASE("integer markers and integer bounds are relaxed with a warning") {
  const MpsParseResult r = parse_mps(Mps(
      "ROWS\n N obj\n G r\nCOLUMNS\n"
      " m1 'MARKER' 'INTORG'\n x obj 1 r 1\n m2 'MARKER' 'INTEND'\n"
      " y obj 1 r 1\n z obj 1\nRHS\n rhs r 1\nBOUNDS\n BV bnd y\n UI bnd z 4\n"));
  CHECK(r.relaxed_integrality);
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].find("3 column") != std::string::npos);
  CHECK(r.problem.lower == Vector{0.0, 0.0, 0.0});
  CHECK(r.problem.upper == Vector{kInf, 1.0, 4.0});
}

TEST_CASE("RHS on the objective row sets the negated constant") {
  const MpsParseResult r =
      parse_mps(Mps("ROWS\n N obj\nCOLUMNS\n x obj 1\nRHS\n rhs obj 2.5\n"));
  CHECK(r.problem.objective_constant == -2.5);
}

TEST_CASE("OBJSENSE MAX negates the objective and sets the flag") {
  for (const char* sense : {"OBJSENSE\n    MAX\n", "OBJSENSE MAXIMIZE\n"}) {
    const MpsParseResult r = parse_mps(std::string("NAME T\n") + sense +
                                       "ROWS\n N obj\nCOLUMNS\n x obj 2\n"
                                       "RHS\n rhs obj 1\nBOUNDS\n UP bnd x 1\nENDATA\n");
    CHECK(r.maximize);
    CHECK(r.problem.objective == Vector{-2.0});
    CHECK(r.problem.objective_constant == 1.0);
  }
}

TEST_CASE("RANGES expand to two G rows") {
  // E with R > 0: [r, r + R]; E with R < 0: [r + R, r]; G: [r, r + |R|];
  // L: [r - |R|, r].
  const MpsParseResult r = parse_mps(Mps(
      "ROWS\n N obj\n E e1\n E e2\n G g\n L l\nCOLUMNS\n"
      " x obj 1 e1 1\n x e2 1 g 1\n x l 1\n"
      "RHS\n rhs e1 1 e2 1\n rhs g 1 l 1\nRANGES\n rng e1 2 e2 -2\n rng g -3 l 3\n"));
  const LpProblem& p = r.problem;
  CHECK(p.num_eq_rows() == 0);
  CHECK(p.ineq_matrix.to_dense() == std::vector{1.0, -1.0, 1.0, -1.0, 1.0, -1.0, 1.0, -1.0});
  CHECK(p.ineq_rhs == Vector{1.0, -3.0, -1.0, -1.0, 1.0, -4.0, -2.0, -1.0});
}

TEST_CASE("an E row with a zero range stays an equality") {
  const MpsParseResult r = parse_mps(Mps(
      "ROWS\n N obj\n E e\nCOLUMNS\n x obj 1 e 1\nRHS\n rhs e 1\nRANGES\n rng e 0\n"));
  CHECK(r.problem.num_eq_rows() == 1);
  CHECK(r.problem.num_ineq_rows() == 0);
}

TEST_CASE("a second RHS set is ignored with a warning") {
  const MpsParseResult r = parse_mps(Mps(
      "ROWS\n N obj\n G g\nCOLUMNS\n x obj 1 g 1\nRHS\n rhs1 g 1\n rhs2 g 9\n"));
  CHECK(r.problem.ineq_rhs == Vector{1.0});
  CHECK(r.warnings.size() == 1);
}

TEST_CASE("structured errors carry the line number") {
  struct Case {
    const char* text;
    ErrorCode code;
    int line;
  };
  const Case cases[] = {
      {"NAME T\nROWS\n N obj\n E r\n E r\nCOLUMNS\n x obj 1\nENDATA\n",
       ErrorCode::kDuplicateRow, 5},
      {"NAME T\nROWS\n N obj\n N obj2\nCOLUMNS\n x obj 1\nENDATA\n",
       ErrorCode::kMultipleObjectiveRows, 4},
      {"NAME T\nROWS\n N obj\n E r\nCOLUMNS\n x obj 1\n y r 1\n x r 1\nENDATA\n",
       ErrorCode::kDuplicateColumn, 8},
      {"NAME T\nROWS\n N obj\nCOLUMNS\n x obj 1 zz 1\nENDATA\n",
       ErrorCode::kUnknownRowReference, 5},
      {"NAME T\nROWS\n N obj\n E r\nCOLUMNS\n x obj 1\nRHS\n rhs zz 1\nENDATA\n",
       ErrorCode::kUnknownRowReference, 8},
      {"NAME T\nROWS\n N obj\n Q r\nCOLUMNS\n x obj 1\nENDATA\n",
       ErrorCode::kSyntaxError, 4},
      {"NAME T\nROWS\n N obj\nCOLUMNS\n x obj abc\nENDATA\n", ErrorCode::kSyntaxError, 5},
      {"NAME T\nROWS\n N obj\nCOLUMNS\n x obj 1\nBOUNDS\n XX bnd x 1\nENDATA\n",
       ErrorCode::kSyntaxError, 7},
      {"NAME T\nROWS\n N obj\nCOLUMNS\n x obj 1 obj 2\nENDATA\n", ErrorCode::kSyntaxError, 5},
      {"NAME T\nROWS\n N obj\nENDATA\n", ErrorCode::kEmptyProblem, 4},
      {"NAME T\nROWS\n N obj\nCOLUMNS\n x obj 1\n", ErrorCode::kSyntaxError, 6},
      {"NAME T\nROWS\n N obj\nCOLUMNS\n x obj 1\nENDATA\nROWS\n", ErrorCode::kSyntaxError, 7},
      {"NAME T\nFOO\n", ErrorCode::kSyntaxError, 2},
      {"NAME T\nROWS\n N obj\nCOLUMNS\n x obj 1\nBOUNDS\n UP bnd x 1\n LO bnd x 2\nENDATA\n",
       ErrorCode::kSyntaxError, 9},
  };
  for (const Case& c : cases) {
    CAPTURE(c.text);
    const Error e = ErrorOf([&] { parse_mps(std::string(c.text)); });
    CHECK(e.code() == c.code);
    CHECK(e.index() == c.line);
    CHECK(std::string(e.what()).find("line " + std::to_string(c.line)) != std::string::npos);
  }
}

TEST_CASE("missing files are an I/O error") {
  CHECK(ErrorOf([] { read_mps_file(kDataDir + "/no_such_file.mps"); }).code() ==
        ErrorCode::kIoError);
}

TEST_CASE("stream and string parsing agree") {
  std::istringstream in(Mps("ROWS\n N obj\nCOLUMNS\n x obj 1\n"));
  CheckSameProblem(parse_mps(in).problem,
                   parse_mps(Mps("ROWS\n N obj\nCOLUMNS\n x obj 1\n")).problem);
}

// A random general-form instance with every bound kind.
LpProblem RandomGeneral(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(1, 5);
  std::uniform_real_distribution<double> value(-10.0, 10.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Index n = size(rng), m1 = size(rng) - 1, m2 = size(rng) - 1;
  auto matrix = [&](Index rows) {
    std::vector<Triplet> t;
    for (Index i = 0; i < rows; ++i) {
      for (Index j = 0; j < n; ++j) {
        if (unit(rng) < 0.5) t.push_back({i, j, value(rng) / 3.0});
      }
    }
    return SparseMatrix::FromTriplets(rows, n, t);
  };
  auto vec = [&](Index len) {
    Vector v(static_cast<size_t>(len));
    for (double& e : v) e = value(rng);
    return v;
  };
  Vector lower(static_cast<size_t>(n)), upper(static_cast<size_t>(n));
  for (Index j = 0; j < n; ++j) {
    const double a = value(rng), b = value(rng);
    switch (static_cast<int>(unit(rng) * 6)) {
      case 0: lower[j] = 0.0; upper[j] = kInf; break;
      case 1: lower[j] = -kInf; upper[j] = kInf; break;
      case 2: lower[j] = std::min(a, b); upper[j] = std::max(a, b); break;
      case 3: lower[j] = -kInf; upper[j] = a; break;
      case 4: lower[j] = a; upper[j] = a; break;
      default: lower[j] = a; upper[j] = kInf; break;
    }
  }
  LpProblem p = make_problem(vec(n), matrix(m2), vec(m2), matrix(m1), vec(m1), lower, upper);
  p.objective_constant = value(rng);
  return p;
}

TEST_CASE("write then parse reproduces the problem") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const LpProblem p = RandomGeneral(rng);
    const MpsParseResult r = parse_mps(write_mps(p));
    CheckSameProblem(r.problem, p);
    CHECK(r.warnings.empty());
  }
}

TEST_CASE("written files use the expected sections") {
  const std::string toy = write_mps(testing::ToyA());
  CHECK(toy.find(" G ") == std::string::npos);
  CheckSameProblem(parse_mps(toy).problem, testing::ToyA());

  LpProblem boxed = testing::ToyA();
  boxed.lower = {-1.0, 0.0};
  boxed.upper = {2.0, kInf};
  const std::string text = write_mps(boxed);
  CHECK(text.find(" LO ") != std::string::npos);
  CHECK(text.find(" UP ") != std::string::npos);
  CHECK(text.find("BOUNDS") != std::string::npos);
}

TEST_CASE("round trip keeps the oracle objective") {
  for (int seed = 0; seed < 30; ++seed) {
    const LpProblem p = testing::SuiteInstance(seed);
    const double before = enumerate_vertices_solve(p).objective;
    const double after = enumerate_vertices_solve(parse_mps(write_mps(p)).problem).objective;
    CHECK(std::abs(after - before) <= 1e-9 * std::max(1.0, std::abs(before)));
  }
}

TEST_CASE("L rows and G rows describe the same feasible set") {
  const std::string with_g =
      "ROWS\n N obj\n G a\n G b\nCOLUMNS\n x obj -1 a -1\n x b -1\n y obj -2 a -1\n"
      " y b -3\nRHS\n rhs a -4 b -6\n";
  const std::string with_l =
      "ROWS\n N obj\n L a\n L b\nCOLUMNS\n x obj -1 a 1\n x b 1\n y obj -2 a 1\n"
      " y b 3\nRHS\n rhs a 4 b 6\n";
  const OracleSolution g = enumerate_vertices_solve(parse_mps(Mps(with_g)).problem);
  const OracleSolution l = enumerate_vertices_solve(parse_mps(Mps(with_l)).problem);
  REQUIRE(g.status == OracleStatus::kOptimal);
  CHECK(l.status == OracleStatus::kOptimal);
  CHECK(g.objective == l.objective);
}

TEST_CASE("the parser is total on corrupted input") {
  const std::string base = write_mps(testing::ToyB()) + "";
  const std::string alphabet = " \nXNEGLRUPFM0123456789.-+eABCDSRHSENDATA*'";
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<size_t> pick_char(0, alphabet.size() - 1);
  int parsed = 0, rejected = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    std::string text = base;
    std::uniform_int_distribution<int> edits(1, 4);
    for (int e = edits(rng); e > 0; --e) {
      std::uniform_int_distribution<size_t> pos(0, text.size() - 1);
      const size_t at = pos(rng);
      switch (trial % 3) {
        case 0: text[at] = alphabet[pick_char(rng)]; break;
        case 1: text.erase(at, 1 + at % 5); break;
        default: text.insert(at, 1, alphabet[pick_char(rng)]); break;
      }
      if (text.empty()) text = "\n";
    }
    try {
      const MpsParseResult r = parse_mps(text);
      validate(r.problem);
      ++parsed;
    } catch (const Error& e) {
      CHECK(e.index() >= 1);
      ++rejected;
    }
  }
  CHECK(parsed + rejected == 2000);
  CHECK(rejected > 0);
}

}  // namespace
}  // namespace fohorse
