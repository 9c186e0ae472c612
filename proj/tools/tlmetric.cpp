// tlmetric: command-line front end for the Temperley-Lieb metric toolkit.
//   verify    -- run the full identity suite for (N, r) grids, emit JSON
//   gram      -- export a sector Gram matrix (CSV or JSON)
//   basis     -- print the tableau/cup basis of a sector
//   render    -- ASCII Kauffman diagram / cup pattern / Young diagram
//   spectrum  -- Hamiltonian spectra, optional transfer-matrix residuals
// Exit codes: 0 pass, 1 verification failure, 2 invalid parameters.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "tl/verify.hpp"

namespace {

// r may be an arithmetic expression over N: "7.3", "N+1", "2N", "10N", "N+pi".
double parse_r_expr(const std::string& expr, int N) {
  double total = 0.0;
  std::stringstream ss(expr);
  std::string part;
  while (std::getline(ss, part, '+')) {
    part.erase(remove_if(part.begin(), part.end(), ::isspace), part.end());
    if (part.empty()) throw std::invalid_argument("empty term in r expression");
    if (part == "pi") {
      total += std::numbers::pi;
    } else if (part == "N") {
      total += N;
    } else if (part.back() == 'N') {
      total += std::stod(part.substr(0, part.size() - 1)) * N;
    } else {
      total += std::stod(part);
    }
  }
  return total;
}

std::vector<int> parse_n_range(const std::string& s) {
  const auto dots = s.find("..");
  std::vector<int> out;
  if (dots == std::string::npos) {
    out.push_back(std::stoi(s));
  } else {
    const int lo = std::stoi(s.substr(0, dots)), hi = std::stoi(s.substr(dots + 2));
    for (int n = lo; n <= hi; ++n) out.push_back(n);
  }
  return out;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(part);
  return out;
}

double default_tol() {
  if (const char* env = std::getenv("TLMETRIC_TOL")) return std::atof(env);
  return 1e-9;
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(path);
    f << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temperley-Lieb Gram/metric verification toolkit"};
  app.require_subcommand(1);

  std::string n_spec = "5", r_spec = "6", out_path, format = "json", word_str, tableau_str, x_spec;
  int sector = -1;
  double tol = default_tol();
  bool wmax = false, half = false, with_transfer = false;

  auto* verify = app.add_subcommand("verify", "run the identity suite");
  verify->add_option("--N", n_spec, "strand count or range (e.g. 5 or 2..8)");
  verify->add_option("--r", r_spec, "r values, comma-separated expressions over N");
  verify->add_option("--tol", tol, "tolerance");
  verify->add_option("-o,--output", out_path, "report file (default stdout)");

  auto* gram = app.add_subcommand("gram", "export a Gram matrix");
  gram->add_option("--N", n_spec);
  gram->add_option("--n", sector, "spin sector (default floor(N/2))");
  gram->add_option("--r", r_spec);
  gram->add_option("--format", format, "csv|json");
  gram->add_flag("--wmax", wmax, "restrict to the maximal-cup subspace");
  gram->add_option("-o,--output", out_path);

  auto* basis_cmd = app.add_subcommand("basis", "print the cup basis of a sector");
  basis_cmd->add_option("--N", n_spec);
  basis_cmd->add_option("--n", sector);

  auto* render_cmd = app.add_subcommand("render", "ASCII diagrams");
  render_cmd->add_option("--N", n_spec);
  render_cmd->add_option("--n", sector);
  render_cmd->add_option("--word", word_str, "generator word, e.g. e1e3e2");
  render_cmd->add_option("--tableau", tableau_str, "shape rows, e.g. 3,2");
  render_cmd->add_flag("--half", half, "render the cup pattern instead of the full diagram");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Hamiltonian spectra");
  spectrum_cmd->add_option("--N", n_spec);
  spectrum_cmd->add_option("--r", r_spec);
  spectrum_cmd->add_flag("--transfer", with_transfer, "transfer-matrix Hermiticity residuals");
  spectrum_cmd->add_option("--x", x_spec, "unit-circle spectral angles, comma-separated");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      bool all_pass = true;
      nlohmann::json out = nlohmann::json::array();
      for (int N : parse_n_range(n_spec)) {
        for (const auto& rexpr : split_list(r_spec)) {
          const double r = parse_r_expr(rexpr, N);
          if (r <= N) {
            std::cerr << "verify requires r > N (got N=" << N << ", r=" << r << ")\n";
            return 2;
          }
          const auto rep = tl::verify_conjecture(N, r, tol, N <= 8);
          out.push_back(nlohmann::json::parse(tl::report_to_json(rep)));
          all_pass = all_pass && rep.pass;
        }
      }
      write_out(out_path, out.size() == 1 ? out[0].dump(2) + "\n" : out.dump(2) + "\n");
      return all_pass ? 0 : 1;
    }

    if (*gram) {
      const int N = parse_n_range(n_spec).at(0);
      const double r = parse_r_expr(r_spec, N);
      if (r <= N) {
        std::cerr << "gram requires r > N\n";
        return 2;
      }
      int n = (sector >= 0) ? sector : N / 2;
      if (wmax) n = N / 2;
      if (n < 0 || n > N) {
        std::cerr << "sector out of range\n";
        return 2;
      }
      const tl::QParam p{r, N, tol};
      const auto basis = tl::enumerate_basis(N, n);
      const Eigen::MatrixXd G =
          wmax ? tl::gram_wmax(N, p, basis) : tl::gram_matrix(N, n, p, basis);
      std::vector<int> rows(G.rows());
      if (wmax) {
        auto idx = tl::wmax_indices(basis, N);
        rows = idx;
      } else {
        for (int k = 0; k < G.rows(); ++k) rows[k] = k;
      }
      if (format == "csv") {
        std::ostringstream os;
        os.precision(15);
        for (int i = 0; i < G.rows(); ++i) {
          for (int j = 0; j < G.cols(); ++j) os << G(i, j) << (j + 1 < G.cols() ? "," : "");
          os << "\n";
        }
        write_out(out_path, os.str());
      } else {
        nlohmann::json j;
        j["N"] = N;
        j["n"] = n;
        j["r"] = r;
        j["wmax"] = wmax;
        j["basis"] = nlohmann::json::array();
        for (int k : rows) {
          std::string w;
          for (int letter : basis[k].word) w += "e" + std::to_string(letter);
          j["basis"].push_back({{"shape", basis[k].tableau.shape},
                                {"word", w.empty() ? "1" : w},
                                {"pattern", tl::render_pattern(basis[k].pattern, N)}});
        }
        j["matrix"] = nlohmann::json::array();
        for (int i = 0; i < G.rows(); ++i) {
          nlohmann::json row = nlohmann::json::array();
          for (int jj = 0; jj < G.cols(); ++jj) row.push_back(G(i, jj));
          j["matrix"].push_back(row);
        }
        write_out(out_path, j.dump(2) + "\n");
      }
      return 0;
    }

    if (*basis_cmd) {
      const int N = parse_n_range(n_spec).at(0);
      const int n = (sector >= 0) ? sector : N / 2;
      if (n < 0 || n > N) {
        std::cerr << "sector out of range\n";
        return 2;
      }
      for (const auto& v : tl::enumerate_basis(N, n)) {
        std::string w;
        for (int letter : v.word) w += "e" + std::to_string(letter);
        std::cout << (w.empty() ? "1" : w) << "\t" << tl::render_pattern(v.pattern, N) << "\n"
                  << tl::render_tableau(v.tableau);
      }
      return 0;
    }

    if (*render_cmd) {
      const int N = parse_n_range(n_spec).at(0);
      if (!tableau_str.empty()) {
        const int n = (sector >= 0) ? sector : N / 2;
        tl::Tableau t{n, {}};
        for (const auto& part : split_list(tableau_str)) t.shape.push_back(std::stoi(part));
        std::cout << tl::render_tableau(t);
        std::string w;
        for (int letter : tl::tableau_to_word(t)) w += "e" + std::to_string(letter);
        std::cout << "word: " << (w.empty() ? "1" : w) << "\n";
        return 0;
      }
      const tl::Word w = tl::parse_word(word_str, N);
      if (half) {
        const int n = (sector >= 0) ? sector : N / 2;
        tl::CupPattern pat = tl::omega_pattern(N, n);
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
          auto act = tl::apply_generator(pat, *it, N);
          if (act.kind == tl::GenAction::zero) {
            std::cout << "0\n";
            return 0;
          }
          pat = act.pattern;
        }
        std::cout << tl::render_pattern(pat, N) << "\n";
      } else {
        std::cout << tl::render(tl::evaluate_word(w, N).diagram);
      }
      return 0;
    }

    if (*spectrum_cmd) {
      const int N = parse_n_range(n_spec).at(0);
      const double r = parse_r_expr(r_spec, N);
      if (r <= N) {
        std::cerr << "spectrum requires r > N\n";
        return 2;
      }
      const tl::QParam p{r, N, tol};
      const auto rep = tl::spectrum_check(N, p);
      std::cout.precision(12);
      std::cout << "eigenvalues:";
      for (double e : rep.eigenvalues) std::cout << " " << e;
      std::cout << "\nmax_imag: " << rep.max_imag
                << "\nsector_mismatch: " << rep.sector_mismatch << "\n";
      if (with_transfer) {
        const tl::CMat eta = tl::reconstruct_eta(N, p);
        for (const auto& xs : split_list(x_spec.empty() ? "0.3,0.7,1.5" : x_spec)) {
          const double theta = std::stod(xs);
          const tl::CMat t = tl::transfer_matrix_circle(theta, N, p);
          const double res =
              tl::scaled_residual(tl::CMat(t.adjoint() * eta), tl::CMat(eta * t));
          std::cout << "transfer theta=" << theta << " eta-hermiticity residual: " << res << "\n";
        }
      }
      return rep.max_imag < std::max(tol, 1e-8) ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
