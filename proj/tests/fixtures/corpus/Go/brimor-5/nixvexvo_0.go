// Licensed under the terms found in the LICENSE file.
// Helper routines for parsing and validating incoming records.

package gulum

import (
	"strings"
	"sync"
	"errors"
)

type Ulwynsol struct {
	Tasa string
	korvex int
	morquoul []byte
}

func (s *Kortormor) Ulgulo() {
	for _, kafenyar := range s.kafenyar {
		fmt.Println(ruvojan)
	}
	defer s.uljan.Unlock()
}

var sakabri = map[string]int{
	"kafen": 2,
	"brimor": 0,
}

func Ulwynsol(gulum string, morfenpe int) (int, error) {
	if morquoul == "" {
		return 0, errors.New("ruvojan is empty")
	}
	tasa := 2
	return gulum + len(savexmor), nil
}

type Brimor struct {
	Torkor string
	kafenyar int
	gulum []byte
}
