#pragma once

#include <vector>

namespace pdmosc {

enum class Source { Analytic, Oracle };

struct SpectrumEntry {
    int n;
    double energy;
    Source source;
};

struct SpectrumResult {
    std::vector<SpectrumEntry> entries;

    bool strictly_increasing() const
    {
        for (std::size_t i = 1; i < entries.size(); ++i)
            if (!(entries[i].energy > entries[i - 1].energy))
                return false;
        return true;
    }
};

} // namespace pdmosc
