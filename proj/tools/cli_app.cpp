#include "cli_app.hpp"

#include <CLI11.hpp>

#include <complex>
#include <iomanip>
#include <ostream>

#include "polyharm/markov.hpp"
#include "polyharm/measures.hpp"
#include "polyharm/parser.hpp"
#include "polyharm/verify.hpp"

namespace polyharm::cli {

namespace {

double parse_double(const std::string& text) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &pos);
  } catch (...) {
    throw Error("cannot parse number: " + text);
  }
  if (pos != text.size()) throw Error("cannot parse number: " + text);
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t end = text.find(sep, start);
    parts.push_back(text.substr(start, end - start));
    if (end == std::string::npos) return parts;
    start = end + 1;
  }
}

// "re" or "re,im".
std::complex<double> parse_complex(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return {parse_double(parts[0]), 0.0};
  if (parts.size() == 2)
    return {parse_double(parts[0]), parse_double(parts[1])};
  throw Error("complex values are written re or re,im: " + text);
}

std::vector<double> parse_vector(const std::string& text) {
  std::vector<double> v;
  for (const std::string& p : split(text, ',')) v.push_back(parse_double(p));
  return v;
}

void dump(std::ostream& out, const nlohmann::ordered_json& doc) {
  out << doc.dump(2) << "\n";
}

nlohmann::ordered_json complex_json(std::complex<double> z) {
  nlohmann::ordered_json doc;
  doc["re"] = z.real();
  doc["im"] = z.imag();
  return doc;
}

void print_series(std::ostream& out, const SeriesRep& series, bool json) {
  if (json) {
    dump(out, series.to_json());
    return;
  }
  for (const auto& [key, value] : series.coeffs) {
    const auto& [s, k, m] = key;
    out << s << " " << k << " " << m << " " << value.str() << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact polyharmonic analysis of discrete measures"};
  app.name("polyharm");
  app.require_subcommand(1);

  // Shared option storage; each subcommand binds the flags it uses.
  int dim = 0, degree = 0, kmax = -1, smax = -1, tmax = 0, order = 0,
      degree_max = 0;
  std::string poly_text, measure_path, other_path, zeta_text, theta_text,
      grid_text;
  bool json = false;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "emit JSON"); };

  CLI::App* c_degree = app.add_subcommand("degree", "polyharmonic degree of a polynomial");
  c_degree->add_option("--dim", dim, "number of variables")->required();
  c_degree->add_option("--poly", poly_text, "polynomial text")->required();
  add_json(c_degree);
  c_degree->callback([&] {
    const MPoly p = parse_poly(poly_text, dim);
    const int d = polyharmonic_degree(p);
    if (json) {
      nlohmann::ordered_json doc;
      doc["degree"] = d;
      dump(out, doc);
    } else {
      out << d << "\n";
    }
  });

  CLI::App* c_almansi = app.add_subcommand("almansi", "harmonic components h_j with p = sum |x|^{2j} h_j");
  c_almansi->add_option("--dim", dim)->required();
  c_almansi->add_option("--poly", poly_text)->required();
  add_json(c_almansi);
  c_almansi->callback([&] {
    const AlmansiDecomp dec = almansi_decompose(parse_poly(poly_text, dim));
    if (json) {
      nlohmann::ordered_json doc;
      doc["dim"] = dim;
      doc["harmonics"] = nlohmann::ordered_json::array();
      for (const MPoly& h : dec.harmonics) doc["harmonics"].push_back(to_string(h));
      dump(out, doc);
    } else {
      for (std::size_t j = 0; j < dec.harmonics.size(); ++j)
        out << "h" << j << " = " << to_string(dec.harmonics[j]) << "\n";
    }
  });

  CLI::App* c_np = app.add_subcommand("np", "maximal polyharmonic degree over harmonic multiples, formula and search");
  c_np->add_option("--dim", dim)->required();
  c_np->add_option("--poly", poly_text)->required();
  c_np->add_option("--kmax", kmax, "search window (default: polynomial degree)");
  add_json(c_np);
  c_np->callback([&] {
    const MPoly p = parse_poly(poly_text, dim);
    const int window = kmax >= 0 ? kmax : p.total_degree();
    const int f = np_formula(p);
    const int s = np_search(p, window);
    if (json) {
      nlohmann::ordered_json doc;
      doc["np"] = f;
      doc["formula"] = f;
      doc["search"] = s;
      doc["k_max"] = window;
      doc["agree"] = (f == s);
      dump(out, doc);
    } else {
      out << f << "\n";
      if (f == s)
        out << "formula=search=" << f << "\n";
      else
        out << "formula=" << f << " search=" << s << " (k_max=" << window
            << " too small for equality)\n";
    }
  });

  CLI::App* c_basis = app.add_subcommand("basis", "orthogonal basis of the degree-k harmonics");
  c_basis->add_option("--dim", dim)->required();
  c_basis->add_option("--degree", degree)->required();
  add_json(c_basis);
  c_basis->callback([&] {
    const HarmonicLayer& layer = harmonic_basis(dim, degree);
    if (json) {
      nlohmann::ordered_json doc;
      doc["dim"] = layer.dim;
      doc["degree"] = layer.degree;
      doc["elements"] = nlohmann::ordered_json::array();
      for (const auto& el : layer.elements) {
        nlohmann::ordered_json je;
        je["poly"] = to_string(el.poly);
        je["norm_sq"] = el.norm_sq.str();
        doc["elements"].push_back(std::move(je));
      }
      dump(out, doc);
    } else {
      for (std::size_t m = 0; m < layer.elements.size(); ++m)
        out << "m=" << (m + 1) << " norm_sq=" << layer.elements[m].norm_sq.str()
            << ": " << to_string(layer.elements[m].poly) << "\n";
    }
  });

  CLI::App* c_moments = app.add_subcommand("moments", "distributed moments of a measure");
  c_moments->add_option("--measure", measure_path, "measure JSON file")->required();
  c_moments->add_option("--tmax", tmax, "radial bound")->required();
  c_moments->add_option("--kmax", kmax, "layer bound")->required();
  add_json(c_moments);
  c_moments->callback([&] {
    const DiscreteMeasure mu = load_measure_file(measure_path);
    const MomentTable table = distributed_moments(mu, tmax, kmax);
    if (json) {
      dump(out, table.to_json());
    } else {
      for (const auto& [key, value] : table.entries) {
        const auto& [t, k, m] = key;
        out << t << " " << k << " " << m << " " << value.str() << "\n";
      }
    }
  });

  CLI::App* c_mseries = app.add_subcommand("markov-series", "transform expansion coefficients");
  c_mseries->add_option("--measure", measure_path)->required();
  c_mseries->add_option("--smax", smax)->required();
  add_json(c_mseries);
  c_mseries->callback([&] {
    print_series(out, markov_series(load_measure_file(measure_path), smax), json);
  });

  CLI::App* c_meval = app.add_subcommand("markov-eval", "numeric transform values");
  c_meval->add_option("--measure", measure_path)->required();
  c_meval->add_option("--zeta", zeta_text, "evaluation point, re or re,im");
  c_meval->add_option("--theta", theta_text, "unit direction, comma-separated")->required();
  c_meval->add_option("--grid", grid_text, "sweep re0,im0:re1,im1:steps as CSV");
  add_json(c_meval);
  c_meval->callback([&] {
    const DiscreteMeasure mu = load_measure_file(measure_path);
    const std::vector<double> theta = parse_vector(theta_text);
    out << std::setprecision(17);
    if (!grid_text.empty()) {
      const auto parts = split(grid_text, ':');
      if (parts.size() != 3) throw Error("grid is written re0,im0:re1,im1:steps");
      const std::complex<double> z0 = parse_complex(parts[0]);
      const std::complex<double> z1 = parse_complex(parts[1]);
      const long steps = (long)parse_double(parts[2]);
      if (steps < 2) throw Error("grid needs at least 2 steps");
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      if (!json) out << "zeta_re,zeta_im,value_re,value_im\n";
      for (long i = 0; i < steps; ++i) {
        const double u = (double)i / (double)(steps - 1);
        const std::complex<double> z = z0 + u * (z1 - z0);
        const std::complex<double> v = markov_eval_numeric(mu, z, theta);
        if (json) {
          nlohmann::ordered_json row;
          row["zeta"] = complex_json(z);
          row["value"] = complex_json(v);
          rows.push_back(std::move(row));
        } else {
          out << z.real() << "," << z.imag() << "," << v.real() << ","
              << v.imag() << "\n";
        }
      }
      if (json) dump(out, rows);
    } else {
      if (zeta_text.empty()) throw Error("markov-eval needs --zeta or --grid");
      const std::complex<double> v =
          markov_eval_numeric(mu, parse_complex(zeta_text), theta);
      if (json)
        dump(out, complex_json(v));
      else
        out << v.real() << " " << v.imag() << "\n";
    }
  });

  CLI::App* c_second = app.add_subcommand("second-kind", "sector polynomials of the function of the second kind");
  c_second->add_option("--poly", poly_text)->required();
  c_second->add_option("--measure", measure_path)->required();
  c_second->add_option("--kmax", kmax, "sector window (default: degree + 10)");
  add_json(c_second);
  c_second->callback([&] {
    const DiscreteMeasure mu = load_measure_file(measure_path);
    const MPoly p = parse_poly(poly_text, mu.dim());
    const SecondKindRep rep = kmax >= 0 ? second_kind(p, mu, kmax)
                                        : second_kind(p, mu);
    if (json) {
      dump(out, rep.to_json());
    } else {
      for (const auto& sector : rep.sectors) {
        out << "k=" << sector.k << " m=" << sector.m << " p:";
        for (const Rational& c : sector.p) out << " " << c.str();
        out << "\n";
      }
    }
  });

  CLI::App* c_rest = app.add_subcommand("rest", "rest-function expansion against a polynomial");
  c_rest->add_option("--poly", poly_text)->required();
  c_rest->add_option("--measure", measure_path)->required();
  c_rest->add_option("--smax", smax)->required();
  add_json(c_rest);
  c_rest->callback([&] {
    const DiscreteMeasure mu = load_measure_file(measure_path);
    print_series(out, rest_series(parse_poly(poly_text, mu.dim()), mu, smax), json);
  });

  CLI::App* c_support = app.add_subcommand("support", "is the measure supported on the variety P = 0?");
  c_support->add_option("--poly", poly_text)->required();
  c_support->add_option("--measure", measure_path)->required();
  c_support->add_option("--smax", smax)->required();
  add_json(c_support);
  c_support->callback([&] {
    const DiscreteMeasure mu = load_measure_file(measure_path);
    const SupportReport report =
        support_verdict(parse_poly(poly_text, mu.dim()), mu, smax);
    if (json) {
      dump(out, report.to_json());
      return;
    }
    switch (report.verdict) {
      case Support::supported:
        out << "supported\n";
        break;
      case Support::not_supported: {
        const auto& [s, k, m] = *report.certificate;
        out << "not_supported s=" << s << " k=" << k << " m=" << m
            << " value=" << report.certificate_value->str() << "\n";
        break;
      }
      case Support::undecided:
        out << "undecided (sufficient s_max = " << report.sufficient_s_max
            << ")\n";
        break;
    }
  });

  CLI::App* c_identity = app.add_subcommand("identity-check", "verify P(zeta theta) T = Q + R coefficientwise");
  c_identity->add_option("--poly", poly_text)->required();
  c_identity->add_option("--measure", measure_path)->required();
  c_identity->add_option("--smax", smax)->required();
  add_json(c_identity);
  bool identity_failed = false;
  c_identity->callback([&] {
    const DiscreteMeasure mu = load_measure_file(measure_path);
    const bool ok = identity_check(parse_poly(poly_text, mu.dim()), mu, smax);
    if (json) {
      nlohmann::ordered_json doc;
      doc["holds"] = ok;
      doc["s_max"] = smax;
      dump(out, doc);
    } else {
      out << (ok ? "identity holds up to s_max=" : "identity VIOLATED within s_max=")
          << smax << "\n";
    }
    identity_failed = !ok;
  });

  CLI::App* c_ortho = app.add_subcommand("ortho-check", "orthogonality of P to all polynomials of degree < order");
  c_ortho->add_option("--poly", poly_text)->required();
  c_ortho->add_option("--measure", measure_path)->required();
  c_ortho->add_option("--order", order)->required();
  add_json(c_ortho);
  c_ortho->callback([&] {
    const DiscreteMeasure mu = load_measure_file(measure_path);
    const bool ok = orthogonality_order(parse_poly(poly_text, mu.dim()), mu, order);
    if (json) {
      nlohmann::ordered_json doc;
      doc["orthogonal"] = ok;
      doc["order"] = order;
      dump(out, doc);
    } else {
      out << (ok ? "true" : "false") << "\n";
    }
  });

  CLI::App* c_rank = app.add_subcommand("density-rank", "evaluation rank of the attached polyharmonic space at the atoms");
  c_rank->add_option("--poly", poly_text)->required();
  c_rank->add_option("--measure", measure_path)->required();
  c_rank->add_option("--degree-max", degree_max)->required();
  c_rank->add_option("--order", order, "override the space order (exploratory)");
  add_json(c_rank);
  bool rank_order_set = false;
  c_rank->parse_complete_callback([&] { rank_order_set = c_rank->count("--order") > 0; });
  c_rank->callback([&] {
    const DiscreteMeasure mu = load_measure_file(measure_path);
    const MPoly p = parse_poly(poly_text, mu.dim());
    std::vector<std::vector<Rational>> pts;
    for (const Atom& a : mu.atoms()) pts.push_back(a.point);
    const RankReport report = rank_order_set
                                  ? density_rank_report(p, pts, order, degree_max)
                                  : density_rank_test(p, pts, degree_max);
    if (json) {
      dump(out, report.to_json());
    } else {
      out << "order=" << report.order << " atoms=" << report.atom_count
          << " basis=" << report.basis_size << " rank=" << report.rank
          << " full_rank=" << (report.full_rank ? "true" : "false") << "\n";
      if (report.witness) out << "witness = " << to_string(*report.witness) << "\n";
    }
  });

  CLI::App* c_sep = app.add_subcommand("separate", "search for a moment separating two measures on the variety");
  c_sep->add_option("--poly", poly_text)->required();
  c_sep->add_option("--measure", measure_path)->required();
  c_sep->add_option("--other", other_path, "second measure JSON file")->required();
  c_sep->add_option("--degree-max", degree_max)->required();
  add_json(c_sep);
  c_sep->callback([&] {
    const DiscreteMeasure mu = load_measure_file(measure_path);
    const DiscreteMeasure nu = load_measure_file(other_path);
    const SeparationReport report =
        separation_test(parse_poly(poly_text, mu.dim()), mu, nu, degree_max);
    if (json) {
      dump(out, report.to_json());
      return;
    }
    switch (report.outcome) {
      case SeparationReport::Outcome::equal:
        out << "equal\n";
        break;
      case SeparationReport::Outcome::separated:
        out << "separated at degree " << report.degree << " by "
            << to_string(*report.witness) << ": " << report.moment_mu->str()
            << " vs " << report.moment_nu->str() << "\n";
        break;
      case SeparationReport::Outcome::inconclusive:
        out << "inconclusive up to degree " << report.degree << "\n";
        break;
    }
  });

  std::vector<const char*> argv;
  argv.push_back("polyharm");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse((int)argv.size(), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return identity_failed ? 1 : 0;
}

}  // namespace polyharm::cli
