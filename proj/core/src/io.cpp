#include "dqca/io.hpp"

#include <cstdio>
#include <fstream>

#include "dqca/errors.hpp"

namespace dqca {

std::string format_float17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out << content;
  out.flush();
  if (!out) {
    throw IoError("write to '" + path + "' failed");
  }
}

namespace {

// Rows of already-formatted cells; shared by the CSV and JSON emitters so
// both serialize the identical digits.
using Table = std::vector<std::vector<std::string>>;

std::string to_csv(const std::vector<std::string>& fields, const Table& rows) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    out += fields[i];
    out += (i + 1 < fields.size()) ? ',' : '\n';
  }
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      out += row[i];
      out += (i + 1 < row.size()) ? ',' : '\n';
    }
  }
  return out;
}

std::string to_json(const std::string& schema,
                    const std::vector<std::string>& fields, const Table& rows,
                    bool quote_first_field = false) {
  std::string out = "{\n  \"schema\": \"" + schema + "\",\n  \"rows\": [\n";
  for (size_t r = 0; r < rows.size(); ++r) {
    out += "    {";
    for (size_t i = 0; i < rows[r].size(); ++i) {
      out += '"';
      out += fields[i];
      out += "\": ";
      if (i == 0 && quote_first_field) {
        out += '"' + rows[r][i] + '"';
      } else {
        out += rows[r][i];
      }
      if (i + 1 < rows[r].size()) out += ", ";
    }
    out += (r + 1 < rows.size()) ? "},\n" : "}\n";
  }
  out += "  ]\n}\n";
  return out;
}

const std::vector<std::string> kDispersionFields = {"k", "E", "vg", "hnorm"};
const std::vector<std::string> kZetaFields = {"mu", "zeta"};
const std::vector<std::string> kTrajectoryFields = {"step", "mean_x", "norm",
                                                    "sigma3"};
const std::vector<std::string> kResidualFields = {"name", "residual"};

Table dispersion_rows(const std::vector<SpectralPoint>& points) {
  Table rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    rows.push_back({format_float17(p.k), format_float17(p.energy),
                    format_float17(p.group_velocity), format_float17(p.hnorm)});
  }
  return rows;
}

Table zeta_rows(const std::vector<ZetaPoint>& points) {
  Table rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    rows.push_back({format_float17(p.mu), format_float17(p.zeta)});
  }
  return rows;
}

Table trajectory_rows(const std::vector<TrajectorySample>& samples) {
  Table rows;
  rows.reserve(samples.size());
  for (const auto& s : samples) {
    rows.push_back({std::to_string(s.step), format_float17(s.mean_x),
                    format_float17(s.norm), format_float17(s.sigma3)});
  }
  return rows;
}

Table residual_rows(const std::vector<NamedResidual>& residuals) {
  Table rows;
  rows.reserve(residuals.size());
  for (const auto& r : residuals) {
    rows.push_back({r.name, format_float17(r.value)});
  }
  return rows;
}

}  // namespace

std::string dispersion_csv(const std::vector<SpectralPoint>& points) {
  return to_csv(kDispersionFields, dispersion_rows(points));
}

std::string zeta_csv(const std::vector<ZetaPoint>& points) {
  return to_csv(kZetaFields, zeta_rows(points));
}

std::string trajectory_csv(const std::vector<TrajectorySample>& samples) {
  return to_csv(kTrajectoryFields, trajectory_rows(samples));
}

std::string residuals_csv(const std::vector<NamedResidual>& residuals) {
  return to_csv(kResidualFields, residual_rows(residuals));
}

std::string dispersion_json(const std::vector<SpectralPoint>& points) {
  return to_json("dispersion", kDispersionFields, dispersion_rows(points));
}

std::string zeta_json(const std::vector<ZetaPoint>& points) {
  return to_json("zeta_curve", kZetaFields, zeta_rows(points));
}

std::string trajectory_json(const std::vector<TrajectorySample>& samples) {
  return to_json("trajectory", kTrajectoryFields, trajectory_rows(samples));
}

std::string residuals_json(const std::string& schema,
                           const std::vector<NamedResidual>& residuals) {
  return to_json(schema, kResidualFields, residual_rows(residuals), true);
}

}  // namespace dqca
