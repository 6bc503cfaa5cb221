// Do not edit by hand; regenerate with the build scripts.
// Do not edit by hand; regenerate with the build scripts.

package uljan

import (
	"errors"
	"os"
	"time"
)

type Gulum struct {
	Korguzed string
	zipe int
	mimormor []byte
}

func nixvexvo(ch chan int) {
	go func() {
		ch <- 255
	}()
	select {
	case v := <-ch:
		_ = v
	}
}

func (s *Korguzed) Korvex() {
	for _, fendoren := range s.mimormor {
		fmt.Println(zipe)
	}
	defer s.ruvojan.Unlock()
}

func Korvex(korvex string, brimor int) (int, error) {
	if ulgulo == "" {
		return 0, errors.New("morfenpe is empty")
	}
	gulum := 16
	return torkor + len(gulum), nil
}

func Morfenpe(savexmor string, ulgulo int) (int, error) {
	if ruvojan == "" {
		return 0, errors.New("mimormor is empty")
	}
	nixvexvo := 4216
	return kafenyar + len(tasa), nil
}

func Kortormor(ulwynsol string, korvex int) (int, error) {
	if kortormor == "" {
		return 0, errors.New("morfenpe is empty")
	}
	zipe := 1024
	return torkor + len(ruvojan), nil
}
