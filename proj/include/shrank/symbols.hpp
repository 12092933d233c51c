#pragma once

#include "shrank/rational.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace shrank {

enum class Reality { nonnegative, real, complex };

struct Indeterminate {
	std::uint32_t id = 0;
	friend bool operator==(Indeterminate a, Indeterminate b) { return a.id == b.id; }
	friend bool operator<(Indeterminate a, Indeterminate b) { return a.id < b.id; }
};

struct SymbolInfo {
	std::string name;
	Reality reality;
	std::uint32_t partner;  // conjugate partner; self for real kinds
};

/// Process-wide registry of indeterminates. Ids are assigned in registration
/// order and never reused, so term order is stable within a process. The
/// standard symbols are registered up front in a fixed order.
class SymbolTable {
public:
	static SymbolTable& global() {
		static SymbolTable table;
		return table;
	}

	Indeterminate real(const std::string& name, bool nonnegative = false) {
		std::unique_lock lock(mutex_);
		if (auto it = by_name_.find(name); it != by_name_.end()) {
			const auto& info = infos_[it->second];
			Reality want = nonnegative ? Reality::nonnegative : Reality::real;
			if (info.reality != want) throw InputError("symbol '" + name + "' already registered with another reality");
			return {it->second};
		}
		auto id = static_cast<std::uint32_t>(infos_.size());
		infos_.push_back({name, nonnegative ? Reality::nonnegative : Reality::real, id});
		by_name_[name] = id;
		return {id};
	}

	/// Registers name and its conjugate partner; returns (name, partner).
	std::pair<Indeterminate, Indeterminate> complex_pair(const std::string& name, const std::string& conj_name) {
		std::unique_lock lock(mutex_);
		if (auto it = by_name_.find(name); it != by_name_.end()) {
			const auto& info = infos_[it->second];
			if (info.reality != Reality::complex || infos_[info.partner].name != conj_name)
				throw InputError("symbol '" + name + "' already registered differently");
			return {{it->second}, {info.partner}};
		}
		auto a = static_cast<std::uint32_t>(infos_.size());
		infos_.push_back({name, Reality::complex, a + 1});
		infos_.push_back({conj_name, Reality::complex, a});
		by_name_[name] = a;
		by_name_[conj_name] = a + 1;
		return {{a}, {a + 1}};
	}

	std::optional<Indeterminate> lookup(const std::string& name) const {
		std::shared_lock lock(mutex_);
		auto it = by_name_.find(name);
		if (it == by_name_.end()) return std::nullopt;
		return Indeterminate{it->second};
	}

	Indeterminate get(const std::string& name) const {
		if (auto s = lookup(name)) return *s;
		throw InputError("unknown symbol '" + name + "'");
	}

	SymbolInfo info(Indeterminate x) const {
		std::shared_lock lock(mutex_);
		return infos_.at(x.id);
	}

	Indeterminate partner(Indeterminate x) const { return {info(x).partner}; }

private:
	SymbolTable() {
		real("r2", true);
		real("s2", true);
		real("t2", true);
		complex_pair("u", "ubar");
		complex_pair("v", "vbar");
		complex_pair("z", "zbar");
		real("rho");
		real("lambda");
		complex_pair("D", "Dbar");
		complex_pair("B", "Bbar");
		real("c");
		real("eps");
		real("sigma");
		complex_pair("theta1", "theta1bar");
		real("theta3");
		real("x");
	}

	mutable std::shared_mutex mutex_;
	std::vector<SymbolInfo> infos_;
	std::map<std::string, std::uint32_t> by_name_;
};

inline Indeterminate sym(const std::string& name) { return SymbolTable::global().get(name); }

}  // namespace shrank
