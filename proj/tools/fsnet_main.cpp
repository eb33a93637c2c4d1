#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fsnet/bounds.hpp"
#include "fsnet/fermi.hpp"
#include "fsnet/io.hpp"
#include "fsnet/lattice.hpp"
#include "fsnet/synth.hpp"
#include "fsnet/verify.hpp"

namespace {

struct ModelArgs {
  std::string model;
  int rows = 0;
  int cols = 0;
  int n = 0;
  std::vector<int> dims;
  double u = 0.0;
  double t = 1.0;
  std::string mode = "swap_optimal";
};

void add_model_flags(CLI::App* sub, ModelArgs& a) {
  sub->add_option("--model", a.model, "spinless | spin | dense | grid")
      ->required()
      ->check(CLI::IsMember({"spinless", "spin", "dense", "grid"}));
  sub->add_option("--rows", a.rows, "lattice rows M (spinless/spin)");
  sub->add_option("--cols", a.cols, "lattice columns N (spinless/spin)");
  sub->add_option("--n", a.n, "mode count (dense)");
  sub->add_option("--dims", a.dims, "grid dimensions, comma separated")->delimiter(',');
  sub->add_option("--u", a.u, "on-site interaction strength");
  sub->add_option("--t", a.t, "hopping amplitude");
  sub->add_option("--mode", a.mode, "dense mode")
      ->check(CLI::IsMember({"swap_optimal", "interaction_optimal"}));
}

fsnet::HubbardModel hubbard_args(const ModelArgs& a) {
  if (a.rows < 1 || a.cols < 1)
    throw std::invalid_argument("spinless/spin models need --rows and --cols");
  fsnet::HubbardModel m;
  m.m = a.rows;
  m.n = a.cols;
  m.spin = a.model == "spin";
  m.u = a.u;
  m.t = a.t;
  return m;
}

fsnet::InteractionGraph model_ig(const ModelArgs& a) {
  if (a.model == "spinless" || a.model == "spin")
    return fsnet::interaction_graph(hubbard_args(a));
  if (a.model == "dense") {
    if (a.n < 2) throw std::invalid_argument("dense model needs --n of at least 2");
    return fsnet::dense_interaction_graph(a.n);
  }
  if (a.model == "grid") {
    if (a.dims.empty()) throw std::invalid_argument("grid model needs --dims");
    return fsnet::grid_interaction_graph(fsnet::make_grid(a.dims));
  }
  throw std::invalid_argument("unknown model " + a.model);
}

fsnet::SwapNetwork model_net(const ModelArgs& a) {
  if (a.model == "spinless" || a.model == "spin")
    return fsnet::hubbard_network(hubbard_args(a));
  if (a.model == "dense") {
    if (a.n < 2) throw std::invalid_argument("dense model needs --n of at least 2");
    return fsnet::dense_network(a.n, a.mode == "swap_optimal"
                                          ? fsnet::DenseMode::swap_optimal
                                          : fsnet::DenseMode::interaction_optimal);
  }
  if (a.model == "grid") {
    if (a.dims.empty()) throw std::invalid_argument("grid model needs --dims");
    return fsnet::grid_network(fsnet::make_grid(a.dims));
  }
  throw std::invalid_argument("unknown model " + a.model);
}

fsnet::BoundsReport model_bounds(const ModelArgs& a) {
  if (a.model == "spinless" || a.model == "spin")
    return fsnet::hubbard_bounds(hubbard_args(a));
  if (a.model == "dense") {
    if (a.n < 2) throw std::invalid_argument("dense model needs --n of at least 2");
    return fsnet::dense_bounds(a.n);
  }
  if (a.model == "grid") {
    if (a.dims.empty()) throw std::invalid_argument("grid model needs --dims");
    fsnet::GridGraph g = fsnet::make_grid(a.dims);
    return fsnet::boundary_profile(g, fsnet::wang_wang_order(g));
  }
  throw std::invalid_argument("unknown model " + a.model);
}

void emit(const std::string& out_path, const std::string& payload) {
  if (out_path.empty())
    std::cout << payload;
  else
    fsnet::write_file(out_path, payload);
}

std::string bounds_text(const fsnet::BoundsReport& b) {
  std::ostringstream os;
  os << "bandwidth " << (b.bandwidth ? std::to_string(*b.bandwidth) : "unknown") << "\n";
  os << "two_bandwidth " << (b.two_bandwidth ? std::to_string(*b.two_bandwidth) : "unknown")
     << "\n";
  os << "swap_depth_lb " << b.swap_depth_lb << "\n";
  os << "interaction_depth_lb " << b.interaction_depth_lb << "\n";
  for (const auto& row : b.profile)
    os << "profile " << row[0] << " " << row[1] << " " << row[2] << "\n";
  os << "method " << b.method << "\n";
  if (!b.note.empty()) os << "note " << b.note << "\n";
  return os.str();
}

int run_synth(const ModelArgs& a, const std::string& fmt, const std::string& out) {
  fsnet::SwapNetwork net = model_net(a);
  std::string payload;
  if (fmt == "json")
    payload = fsnet::network_to_json(net);
  else if (fmt == "text")
    payload = fsnet::network_to_text(net);
  else
    payload = fsnet::network_to_dot(net, model_ig(a));
  emit(out, payload);
  return 0;
}

int run_bounds(const ModelArgs& a, const std::string& fmt, const std::string& out) {
  fsnet::BoundsReport b = model_bounds(a);
  emit(out, fmt == "json" ? fsnet::bounds_to_json(b) : bounds_text(b));
  return 0;
}

int run_verify(const ModelArgs& a, const std::string& file, bool against) {
  std::string text = fsnet::read_file(file);
  fsnet::SwapNetwork net;
  fsnet::InteractionGraph ig = model_ig(a);
  int rc = 0;
  try {
    net = fsnet::network_from_json(text);
    fsnet::CoverageReport rep = fsnet::coverage(net, ig);
    std::cout << fsnet::coverage_to_json(rep, ig);
    if (!rep.complete()) rc = 1;
    if (against) {
      fsnet::BoundsReport b = model_bounds(a);
      fsnet::OptimalityCheck oc = fsnet::check_against_bounds(rep, b);
      std::cout << "swap_depth=" << rep.swap_depth << (oc.swap_optimal ? " optimal" : " suboptimal")
                << " (lower bound " << b.swap_depth_lb << ")\n";
      if (!oc.swap_optimal) rc = 1;
    }
  } catch (const std::runtime_error& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

int run_check_fermionic(const ModelArgs& a, const std::string& net_file, double dt, double tol) {
  if (a.model != "spinless" && a.model != "spin")
    throw std::invalid_argument("check-fermionic needs a spinless or spin model");
  fsnet::HubbardModel m = hubbard_args(a);
  fsnet::SwapNetwork net;
  if (net_file.empty())
    net = fsnet::hubbard_network(m);
  else
    net = fsnet::network_from_json(fsnet::read_file(net_file));

  bool perm_ok = fsnet::mode_permutation_check(net);
  fsnet::TrotterCheck tc = fsnet::trotter_error_check(m, net, dt);
  bool pass = perm_ok && (tc.err <= tol || (tc.ratio >= 3.2 && tc.ratio <= 4.8));
  std::ostringstream os;
  os << std::setprecision(12) << "{\"err\":" << tc.err << ",\"ratio\":" << tc.ratio
     << ",\"perm_ok\":" << (perm_ok ? "true" : "false")
     << ",\"pass\":" << (pass ? "true" : "false") << "}\n";
  std::cout << os.str();
  return pass ? 0 : 1;
}

int run_export(const std::string& file, const ModelArgs& a, bool have_model,
               const std::string& fmt, const std::string& out, int drop_layer) {
  fsnet::SwapNetwork net = fsnet::network_from_json(fsnet::read_file(file));
  if (drop_layer >= 0) {
    if (drop_layer >= static_cast<int>(net.layers.size()))
      throw std::invalid_argument("--drop-layer index out of range");
    net.layers.erase(net.layers.begin() + drop_layer);
  }
  std::string payload;
  if (fmt == "json") {
    payload = fsnet::network_to_json(net);
  } else if (fmt == "text") {
    payload = fsnet::network_to_text(net);
  } else {
    if (!have_model) throw std::invalid_argument("dot export needs --model");
    payload = fsnet::network_to_dot(net, model_ig(a));
  }
  emit(out, payload);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"swap network synthesis and verification for lattice fermion models"};
  app.require_subcommand(1);

  ModelArgs synth_a, bounds_a, verify_a, check_a, export_a, oracle_a;
  std::string synth_fmt = "json", synth_out;
  std::string bounds_fmt = "json", bounds_out;
  std::string verify_file;
  bool verify_against = false;
  std::string check_net;
  double check_dt = 0.05, check_tol = 1e-12;
  std::string export_file, export_fmt = "json", export_out;
  int export_drop = -1;
  std::vector<int> oracle_dims;
  int oracle_max_bw = 9, oracle_max_sd = 7, oracle_n = 0;
  std::string oracle_model = "grid";

  CLI::App* synth = app.add_subcommand("synth", "build a swap network");
  add_model_flags(synth, synth_a);
  synth->add_option("--format", synth_fmt)->check(CLI::IsMember({"json", "text", "dot"}));
  synth->add_option("--out", synth_out, "output file (stdout when absent)");

  CLI::App* bounds = app.add_subcommand("bounds", "report depth lower bounds");
  add_model_flags(bounds, bounds_a);
  bounds->add_option("--format", bounds_fmt)->check(CLI::IsMember({"json", "text"}));
  bounds->add_option("--out", bounds_out);

  CLI::App* verify = app.add_subcommand("verify", "check a network file against a model");
  verify->add_option("file", verify_file, "network JSON file")->required();
  add_model_flags(verify, verify_a);
  verify->add_flag("--against-bounds", verify_against, "also assert swap-depth optimality");

  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive reference searches");
  oracle->require_subcommand(1);
  CLI::App* obw = oracle->add_subcommand("bandwidth", "exact bandwidth of a grid");
  obw->add_option("--dims", oracle_dims)->delimiter(',')->required();
  obw->add_option("--max-size", oracle_max_bw);
  CLI::App* otb = oracle->add_subcommand("two-bandwidth", "exact 2-bandwidth of a grid");
  otb->add_option("--dims", oracle_dims)->delimiter(',')->required();
  otb->add_option("--max-size", oracle_max_bw);
  CLI::App* osd = oracle->add_subcommand("min-swap-depth", "exact minimal swap depth");
  osd->add_option("--dims", oracle_dims)->delimiter(',');
  osd->add_option("--model", oracle_model)->check(CLI::IsMember({"grid", "dense"}));
  osd->add_option("--n", oracle_n, "mode count for --model dense");
  osd->add_option("--max-size", oracle_max_sd);

  CLI::App* check = app.add_subcommand("check-fermionic", "physics oracle for a model");
  add_model_flags(check, check_a);
  check->add_option("--net", check_net, "network JSON file (synthesized when absent)");
  check->add_option("--dt", check_dt, "Trotter step");
  check->add_option("--tol", check_tol, "error threshold treated as exact");

  CLI::App* exp = app.add_subcommand("export", "re-emit a network file");
  exp->add_option("file", export_file, "network JSON file")->required();
  bool export_have_model = false;
  exp->add_option("--model", export_a.model, "model for dot annotation")
      ->check(CLI::IsMember({"spinless", "spin", "dense", "grid"}));
  exp->add_option("--rows", export_a.rows);
  exp->add_option("--cols", export_a.cols);
  exp->add_option("--n", export_a.n);
  exp->add_option("--dims", export_a.dims)->delimiter(',');
  exp->add_option("--format", export_fmt)->check(CLI::IsMember({"json", "text", "dot"}));
  exp->add_option("--out", export_out);
  exp->add_option("--drop-layer", export_drop, "omit one layer before emitting");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*synth) return run_synth(synth_a, synth_fmt, synth_out);
    if (*bounds) return run_bounds(bounds_a, bounds_fmt, bounds_out);
    if (*verify) {
      try {
        return run_verify(verify_a, verify_file, verify_against);
      } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
    }
    if (*check) {
      try {
        return run_check_fermionic(check_a, check_net, check_dt, check_tol);
      } catch (const std::runtime_error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
      }
    }
    if (*exp) {
      export_have_model = !export_a.model.empty();
      return run_export(export_file, export_a, export_have_model, export_fmt, export_out,
                        export_drop);
    }
    if (*oracle) {
      if (*obw) {
        fsnet::GridGraph g = fsnet::make_grid(oracle_dims);
        std::cout << fsnet::bandwidth_exact(g, oracle_max_bw) << "\n";
        return 0;
      }
      if (*otb) {
        fsnet::GridGraph g = fsnet::make_grid(oracle_dims);
        std::cout << fsnet::two_bandwidth_exact(g, oracle_max_bw) << "\n";
        return 0;
      }
      if (*osd) {
        fsnet::InteractionGraph ig;
        if (!oracle_dims.empty())
          ig = fsnet::grid_interaction_graph(fsnet::make_grid(oracle_dims));
        else if (oracle_model == "dense" && oracle_n >= 2)
          ig = fsnet::dense_interaction_graph(oracle_n);
        else
          throw std::invalid_argument("min-swap-depth needs --dims or --model dense --n");
        std::cout << fsnet::min_swap_depth_exhaustive(ig, oracle_max_sd) << "\n";
        return 0;
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand\n";
  return 2;
}
