// SPDX-License-Identifier: Apache-2.0
//
// macrodiv: macro-diversity and signal-strength variability simulator
// Copyright (C) 2026 The macrodiv authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#include <string>

#include "cli_app.hpp"
#include "doctest.h"

TEST_CASE("help lists every flag and subcommand") {
    CLI::App app{"macrodiv", "macrodiv"};
    macrodiv::cli::Options opt;
    macrodiv::cli::configure(app, opt);
    const std::string help = app.help();

    std::size_t flags = 0;
    for (const CLI::Option* option : app.get_options()) {
        for (const auto& name : option->get_lnames()) {
            CHECK_MESSAGE(help.find("--" + name) != std::string::npos, "missing --" << name);
            ++flags;
        }
        CHECK_FALSE(option->get_description().empty());
    }
    CHECK(flags == 12);  // help, config, out, seed, trials, deployment, Q, S, position, cardinalities, threads, verbose
    for (const char* name : macrodiv::cli::kSubcommands) {
        CHECK_MESSAGE(help.find(name) != std::string::npos, "missing subcommand " << name);
    }
    CHECK(app.get_subcommands({}).size() == std::size(macrodiv::cli::kSubcommands));
}

TEST_CASE("flags parse after the subcommand") {
    CLI::App app{"macrodiv", "macrodiv"};
    macrodiv::cli::Options opt;
    macrodiv::cli::configure(app, opt);
    app.parse(std::vector<std::string>{"./out", "--out", "42", "--seed", "reproduce"});  // reversed argv
    CHECK(opt.subcommand == "reproduce");
    CHECK(*opt.seed == 42);
    CHECK(opt.out_dir == "./out");
}
