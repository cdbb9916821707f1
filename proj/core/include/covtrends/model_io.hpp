// SPDX-License-Identifier: Apache-2.0
//
// Versioned binary model file: header, then every parameter as a
// little-endian IEEE-754 double. Round-trips are value-exact.

#pragma once

#include <string>

#include "covtrends/sentiment.hpp"

namespace covtrends {

void save_model(const SentimentModel& model, const std::string& path);

// Reconstructs the model around a reference encoder carrying the saved
// table. Throws FormatError on a bad magic/version, IoError on
// unreadable files.
SentimentModel load_model(const std::string& path);

}  // namespace covtrends
